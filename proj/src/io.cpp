#include "omact/io.hpp"

#include <fstream>
#include <sstream>

namespace omact::io {

namespace {

json label_array(const GroundSet& g, Mask m) { return json(labels_of(g, m)); }

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw ParseError(std::string(what) + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

Rational rational_entry(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError("matrix entries must be integers or \"p/q\" strings");
}

}  // namespace

json signed_subset_json(const SignedSubset& s) {
    return json{{"pos", label_array(s.ground(), s.pos())},
                {"neg", label_array(s.ground(), s.neg())}};
}

SignedSubset signed_subset_from_json(const GroundSet& ground, const json& j) {
    if (!j.is_object() || !j.contains("pos") || !j.contains("neg"))
        throw ParseError("signed subset needs \"pos\" and \"neg\" arrays");
    try {
        return SignedSubset(ground, mask_of(ground, string_list(j.at("pos"), "pos")),
                            mask_of(ground, string_list(j.at("neg"), "neg")));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

json matroid_json(const Matroid& m) {
    json bases = json::array();
    for (Mask b : m.bases()) bases.push_back(label_array(m.ground(), b));
    return json{{"elements", json(m.ground().labels())}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("bases"))
        throw ParseError("matroid needs \"elements\" and \"bases\"");
    try {
        GroundSet ground(string_list(j.at("elements"), "elements"));
        std::vector<Mask> bases;
        for (const auto& b : j.at("bases")) bases.push_back(mask_of(ground, string_list(b, "basis")));
        return Matroid(ground, std::move(bases));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
}

json om_json(const OrientedMatroid& m) {
    json circuits = json::array();
    for (const auto& c : m.circuits()) {
        if (!contains(c.pos(), min_element(c.support()))) continue;  // one rep per ± pair
        circuits.push_back(signed_subset_json(c));
    }
    return json{{"elements", json(m.ground().labels())}, {"circuits", circuits}};
}

OrientedMatroid om_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("circuits"))
        throw ParseError("oriented matroid needs \"elements\" and \"circuits\"");
    GroundSet ground;
    try {
        ground = GroundSet(string_list(j.at("elements"), "elements"));
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    std::vector<SignedSubset> reps;
    for (const auto& c : j.at("circuits")) reps.push_back(signed_subset_from_json(ground, c));
    return OrientedMatroid::from_circuits(ground, reps);
}

json partition_json(const ActivePartition& part, const GroundSet& g) {
    json cyclic = json::array(), acyclic = json::array();
    for (Mask p : part.cyclic_parts) cyclic.push_back(label_array(g, p));
    for (Mask p : part.acyclic_parts) acyclic.push_back(label_array(g, p));
    return json{{"cyclic", cyclic}, {"hybrid", label_array(g, part.hybrid_part)},
                {"acyclic", acyclic}};
}

json classes_json(const ReorientationClasses& classes, const GroundSet& g) {
    json out = json::array();
    for (const auto& cls : classes.classes) {
        json members = json::array();
        for (Mask m : cls.members) members.push_back(label_array(g, m));
        out.push_back(json{{"representative", label_array(g, cls.representative)},
                           {"members", members},
                           {"iota", cls.iota},
                           {"epsilon", cls.epsilon}});
    }
    return out;
}

json dawson_json(const std::vector<DawsonInterval>& intervals, const MatroidPerspective& p) {
    json out = json::array();
    for (const auto& iv : intervals) {
        out.push_back(json{{"base", label_array(p.ground(), iv.base)},
                           {"lower", label_array(p.ground(), iv.lower)},
                           {"upper", label_array(p.ground(), iv.upper)},
                           {"rcd", rank_codefect(p, iv.base)}});
    }
    return json{{"intervals", out}};
}

json poly_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.sorted_terms()) {
        out.push_back(json{{"exp",
                            json{{"x", e[0]}, {"y", e[1]}, {"z", e[2]}, {"u", e[3]}, {"v", e[4]}}},
                           {"coef", c.str()}});
    }
    return out;
}

json census_json(const CensusRecord& record) {
    json rows = json::array();
    for (const auto& row : record.rows) {
        json r{{"condition", row.condition},
               {"point", json::array({row.x, row.y, 1})},
               {"reorientations", row.reorientation_count},
               {"tutte", row.tutte_value}};
        if (row.class_count) r["classes"] = *row.class_count;
        rows.push_back(std::move(r));
    }
    return json{{"rows", rows}};
}

json verification_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return json{{"checks", checks}, {"all_pass", report.all_pass()}};
}

std::string partition_text(const ActivePartition& part, const GroundSet& g) {
    std::ostringstream os;
    os << "cyclic: ";
    for (Mask p : part.cyclic_parts) os << format_set(g, p) << ' ';
    os << "\nhybrid: " << format_set(g, part.hybrid_part) << "\nacyclic: ";
    for (Mask p : part.acyclic_parts) os << format_set(g, p) << ' ';
    os << '\n';
    return os.str();
}

std::string classes_text(const ReorientationClasses& classes, const GroundSet& g) {
    std::ostringstream os;
    os << classes.classes.size() << " activity classes\n";
    for (const auto& cls : classes.classes) {
        os << "representative " << format_set(g, cls.representative) << " iota=" << cls.iota
           << " epsilon=" << cls.epsilon << " members:";
        for (Mask m : cls.members) os << ' ' << format_set(g, m);
        os << '\n';
    }
    return os.str();
}

std::string census_text(const CensusRecord& record) {
    std::ostringstream os;
    for (const auto& row : record.rows) {
        os << row.condition << ": " << row.reorientation_count << " = t(" << row.x << ','
           << row.y << ",1)";
        if (row.class_count) os << " [classes " << *row.class_count << ']';
        os << '\n';
    }
    return os.str();
}

std::string verification_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << (c.pass ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << " — " << c.detail;
        os << '\n';
    }
    os << (report.all_pass() ? "all identities hold" : "IDENTITY FAILURES PRESENT") << '\n';
    return os.str();
}

bool CorpusRun::all_pass() const {
    for (const auto& [name, report] : reports)
        if (!report.all_pass()) return false;
    return true;
}

CorpusRun run_corpus_verification(std::uint32_t seed, int count, int size_guard) {
    CorpusRun run;
    run.seed = seed;
    run.count = count;
    for (const auto& entry : corpus::full(seed, count))
        run.reports.emplace_back(entry.name, verify_identities(entry.perspective, size_guard));
    return run;
}

std::string corpus_run_text(const CorpusRun& run) {
    std::ostringstream os;
    os << "corpus verification: seed " << run.seed << ", " << run.reports.size()
       << " perspectives (" << run.count << " generated)\n";
    int failures = 0;
    for (const auto& [name, report] : run.reports) {
        int failed_checks = 0;
        for (const auto& c : report.checks)
            if (!c.pass) ++failed_checks;
        os << name << ": " << report.checks.size() << " identities, "
           << (failed_checks == 0 ? "all hold" : std::to_string(failed_checks) + " FAIL") << '\n';
        if (failed_checks != 0) {
            ++failures;
            for (const auto& c : report.checks)
                if (!c.pass) os << "  FAIL " << c.name << " — " << c.detail << '\n';
        }
    }
    os << "summary: " << run.reports.size() << " perspectives, " << failures << " with failures\n";
    return os.str();
}

json corpus_run_json(const CorpusRun& run) {
    json reports = json::array();
    for (const auto& [name, report] : run.reports) {
        json r = verification_json(report);
        r["perspective"] = name;
        reports.push_back(std::move(r));
    }
    return json{{"seed", run.seed},
                {"generated", run.count},
                {"reports", reports},
                {"all_pass", run.all_pass()}};
}

Digraph parse_digraph(std::istream& in) {
    Digraph g;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tail, head, label, extra;
        if (!(ls >> tail)) continue;  // blank line
        if (!(ls >> head >> label) || (ls >> extra))
            throw ParseError("digraph line " + std::to_string(line_no) +
                             ": expected 'tail head label'");
        g.arcs.push_back(Arc{tail, head, label});
    }
    return g;
}

MatrixData matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("labels") || !j.contains("rows"))
        throw ParseError("matrix needs \"labels\" and \"rows\"");
    MatrixData data;
    data.labels = string_list(j.at("labels"), "labels");
    for (const auto& row : j.at("rows")) {
        if (!row.is_array()) throw ParseError("matrix rows must be arrays");
        std::vector<Rational> r;
        for (const auto& entry : row) r.push_back(rational_entry(entry));
        if (r.size() != data.labels.size())
            throw ParseError("matrix row width differs from the label count");
        data.rows.push_back(std::move(r));
    }
    return data;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace omact::io
