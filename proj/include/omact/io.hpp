#pragma once

// Serialization (JSON and text) for every externally visible structure, and
// parsers for the digraph / matrix / matroid / oriented-matroid file formats.
// All emission is deterministic: sets in ground order, families in canonical
// order, polynomial terms in presentation order.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "omact/activities.hpp"
#include "omact/corpus.hpp"
#include "omact/matroid.hpp"
#include "omact/oriented.hpp"
#include "omact/poly.hpp"
#include "omact/subsets.hpp"
#include "omact/tutte.hpp"

namespace omact::io {

using json = nlohmann::ordered_json;

// {"pos":[labels],"neg":[labels]}
json signed_subset_json(const SignedSubset& s);
SignedSubset signed_subset_from_json(const GroundSet& ground, const json& j);

// {"elements":[...],"bases":[[...],...]}
json matroid_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

// {"elements":[...],"circuits":[{"pos":..,"neg":..},...]} — one
// representative per ± pair, + on the support minimum; closure on load.
json om_json(const OrientedMatroid& m);
OrientedMatroid om_from_json(const json& j);

// {"cyclic":[[...]],"hybrid":[...],"acyclic":[[...]]}
json partition_json(const ActivePartition& part, const GroundSet& g);

// [{"representative":[...],"members":[[...]],"iota":i,"epsilon":j},...]
json classes_json(const ReorientationClasses& classes, const GroundSet& g);

// {"intervals":[{"base":[...],"lower":[...],"upper":[...],"rcd":k},...]}
json dawson_json(const std::vector<DawsonInterval>& intervals, const MatroidPerspective& p);

// [{"exp":{"x":i,"y":j,"z":k,"u":l,"v":m},"coef":"p/q"},...]
json poly_json(const MultiPoly& p);

json census_json(const CensusRecord& record);
json verification_json(const VerificationReport& report);

std::string partition_text(const ActivePartition& part, const GroundSet& g);
std::string classes_text(const ReorientationClasses& classes, const GroundSet& g);
std::string census_text(const CensusRecord& record);
std::string verification_text(const VerificationReport& report);

// Multi-instance verification run, used by `verify --corpus`.
struct CorpusRun {
    std::uint32_t seed = 0;
    int count = 0;
    std::vector<std::pair<std::string, VerificationReport>> reports;
    bool all_pass() const;
};
CorpusRun run_corpus_verification(std::uint32_t seed, int count, int size_guard);
std::string corpus_run_text(const CorpusRun& run);
json corpus_run_json(const CorpusRun& run);

// Text lines "tail head label"; blank lines and '#' comments ignored.
Digraph parse_digraph(std::istream& in);

// {"labels":[...],"rows":[[entry,...],...]}; entries are integers or "p/q".
struct MatrixData {
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> rows;
};
MatrixData matrix_from_json(const json& j);

json load_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace omact::io
