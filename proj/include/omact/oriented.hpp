#pragma once

// Oriented matroids via signed circuits, their derived cocircuits,
// reorientation, duality, constructors from digraphs / rational matrices /
// explicit circuit lists, and the oriented-perspective test.

#include <optional>
#include <string>
#include <vector>

#include "omact/matroid.hpp"
#include "omact/rational.hpp"

namespace omact {

struct Arc {
    std::string tail;
    std::string head;
    std::string label;
};

struct Digraph {
    std::vector<Arc> arcs;  // arc order = ground order
};

class OrientedMatroid {
public:
    // Graphic oriented matroid: circuits are the simple cycles with + on arcs
    // traversed forward; cocircuits the minimal directed cuts.
    static OrientedMatroid from_digraph(const Digraph& g);

    // Realizable oriented matroid of a rational column configuration:
    // circuits are the sign patterns of minimal-support kernel vectors.
    static OrientedMatroid from_matrix(const std::vector<std::vector<Rational>>& rows,
                                       const std::vector<std::string>& labels);

    // Explicit ingestion: one representative per ± pair is enough; the list
    // is closed under negation, the support family checked against the
    // circuit axioms, and cocircuit signs derived by orthogonality completion.
    static OrientedMatroid from_circuits(const GroundSet& ground,
                                         const std::vector<SignedSubset>& circuit_reps);

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    const std::vector<SignedSubset>& circuits() const { return circuits_; }
    const std::vector<SignedSubset>& cocircuits() const { return cocircuits_; }
    const Matroid& underlying() const { return underlying_; }
    int rank() const { return underlying_.rank(); }

    OrientedMatroid reorient(Mask a) const;
    OrientedMatroid dual() const;

    std::vector<SignedSubset> positive_circuits() const;
    std::vector<SignedSubset> positive_cocircuits() const;
    bool is_acyclic() const;         // no all-positive circuit
    bool is_totally_cyclic() const;  // no all-positive cocircuit

    // Same ground set and same signed circuit family.
    bool operator==(const OrientedMatroid& o) const;
    bool operator!=(const OrientedMatroid& o) const { return !(*this == o); }

private:
    OrientedMatroid(GroundSet ground, std::vector<SignedSubset> circuits,
                    std::vector<SignedSubset> cocircuits, Matroid underlying);
    static OrientedMatroid finish(const GroundSet& ground,
                                  std::vector<SignedSubset> circuit_pairs, Matroid underlying);
    void validate() const;

    GroundSet ground_;
    std::vector<SignedSubset> circuits_;    // closed under negation, canonical order
    std::vector<SignedSubset> cocircuits_;  // derived at construction, canonical order
    Matroid underlying_;
};

// A circuit of m and a cocircuit of n with a non-empty conformal intersection.
struct OMPerspectiveViolation {
    SignedSubset circuit;
    SignedSubset cocircuit;
};

struct OMPerspectiveCheck {
    bool ok = false;
    std::optional<OMPerspectiveViolation> witness;  // set when !ok
};

// Decides whether (m, n) is an oriented matroid perspective: no circuit of m
// may have a non-empty conformal intersection with a cocircuit of n. A
// positive verdict is cross-checked against the underlying matroid test.
OMPerspectiveCheck is_om_perspective(const OrientedMatroid& m, const OrientedMatroid& n);

class OMPerspective {
public:
    OMPerspective(OrientedMatroid m, OrientedMatroid n);

    const OrientedMatroid& m() const { return m_; }
    const OrientedMatroid& n() const { return n_; }
    const GroundSet& ground() const { return m_.ground(); }
    int size() const { return m_.size(); }
    const MatroidPerspective& underlying() const { return underlying_; }

    OMPerspective reorient(Mask a) const;

private:
    void check_construction() const;

    OrientedMatroid m_;
    OrientedMatroid n_;
    MatroidPerspective underlying_;
};

// Digraph minors, used by the corpus generator and the CLI `minor:` inputs.
Digraph delete_arcs(const Digraph& g, Mask f);
Digraph contract_arcs(const Digraph& g, Mask f);
// (delete f, contract f) as an oriented perspective on the remaining arcs.
OMPerspective digraph_minor_perspective(const Digraph& g, Mask f);

}  // namespace omact
