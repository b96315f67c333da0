// omact — exact computations on (oriented) matroid perspectives over a
// linearly ordered ground set: validity checks, active partitions, activity
// classes, reorientation censuses and the Tutte polynomial through five
// cross-verified formulas.
//
// Exit codes: 0 success, 1 check/identity failure, 2 parse or validation
// error, 3 operation unsupported for the input kind, 4 size guard exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "omact/io.hpp"

namespace {

using namespace omact;
using omact::io::json;

struct Options {
    std::string format = "text";
    int size_guard = kDefaultSizeGuard;
    int verify_guard = kVerifySizeGuard;
};

// An instance is either oriented or plain; perspectives pair two of them.
using Instance = std::variant<OrientedMatroid, Matroid>;

struct Perspective {
    std::optional<OMPerspective> oriented;
    std::optional<MatroidPerspective> plain;  // set when not oriented

    const MatroidPerspective& matroid() const {
        return oriented ? oriented->underlying() : *plain;
    }
    const OMPerspective& om() const {
        if (!oriented)
            throw CapabilityError("this operation needs oriented input");
        return *oriented;
    }
};

Mask parse_label_set(const GroundSet& g, const std::string& csv) {
    Mask out = 0;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) continue;
        out |= single(g.index(item));
    }
    return out;
}

Instance resolve_instance(const std::string& spec) {
    if (spec == "COLOOP1") return corpus::coloop1();
    if (spec == "LOOP1") return corpus::loop1();
    if (spec == "CYC3") return corpus::cyc3();
    if (spec == "N1") return corpus::n1();
    if (spec == "K4") return corpus::k4();
    if (spec == "TRIANGLE") return corpus::triangle();

    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("unknown instance '" + spec +
                         "' (expected a builtin name or kind:path)");
    const std::string kind = spec.substr(0, colon);
    const std::string path = spec.substr(colon + 1);
    if (kind == "digraph") {
        std::istringstream in(io::read_text_file(path));
        return OrientedMatroid::from_digraph(io::parse_digraph(in));
    }
    if (kind == "om") return io::om_from_json(io::load_json_file(path));
    if (kind == "matroid") return io::matroid_from_json(io::load_json_file(path));
    if (kind == "matrix") {
        const auto data = io::matrix_from_json(io::load_json_file(path));
        return OrientedMatroid::from_matrix(data.rows, data.labels);
    }
    throw ParseError("unknown instance kind '" + kind + "'");
}

const GroundSet& ground_of(const Instance& inst) {
    if (const auto* om = std::get_if<OrientedMatroid>(&inst)) return om->ground();
    return std::get<Matroid>(&inst)->ground();
}

// minor:PATH:lbl1,lbl2 — digraph minor perspective contracting the labels.
std::optional<Perspective> resolve_minor(const std::string& spec) {
    if (spec.rfind("minor:", 0) != 0) return std::nullopt;
    const auto second = spec.find(':', 6);
    if (second == std::string::npos)
        throw ParseError("minor instance needs 'minor:PATH:label,label,...'");
    std::istringstream in(io::read_text_file(spec.substr(6, second - 6)));
    const Digraph parent = io::parse_digraph(in);
    std::vector<std::string> labels;
    for (const auto& arc : parent.arcs) labels.push_back(arc.label);
    const Mask f = parse_label_set(GroundSet(labels), spec.substr(second + 1));
    Perspective p;
    p.oriented = digraph_minor_perspective(parent, f);
    return p;
}

Perspective pair_up(Instance a, Instance b) {
    require_same_ground(ground_of(a), ground_of(b));
    Perspective p;
    auto* oma = std::get_if<OrientedMatroid>(&a);
    auto* omb = std::get_if<OrientedMatroid>(&b);
    if (oma && omb) {
        p.oriented = OMPerspective(*oma, *omb);
    } else {
        auto plain = [](Instance& inst) {
            if (auto* om = std::get_if<OrientedMatroid>(&inst)) return om->underlying();
            return std::get<Matroid>(std::move(inst));
        };
        p.plain = MatroidPerspective(plain(a), plain(b));
    }
    return p;
}

Perspective resolve_perspective(const std::vector<std::string>& specs) {
    if (specs.size() == 1) {
        if (specs[0] == "PERSP1") {
            Perspective p;
            p.oriented = corpus::persp1();
            return p;
        }
        if (auto minor = resolve_minor(specs[0])) return *minor;
        Instance inst = resolve_instance(specs[0]);
        Instance copy = inst;
        return pair_up(std::move(inst), std::move(copy));
    }
    return pair_up(resolve_instance(specs[0]), resolve_instance(specs[1]));
}

void emit(const Options& opt, const json& as_json, const std::string& as_text) {
    if (opt.format == "json")
        std::cout << as_json.dump(2) << '\n';
    else
        std::cout << as_text;
}

int cmd_check(const Options& opt, const std::vector<std::string>& specs) {
    // Validate without constructing, so the witness can be reported.
    bool ok = false;
    json report;
    std::ostringstream text;
    if (specs.size() == 2) {
        Instance a = resolve_instance(specs[0]);
        Instance b = resolve_instance(specs[1]);
        require_same_ground(ground_of(a), ground_of(b));
        auto* oma = std::get_if<OrientedMatroid>(&a);
        auto* omb = std::get_if<OrientedMatroid>(&b);
        if (oma && omb) {
            auto check = is_om_perspective(*oma, *omb);
            ok = check.ok;
            report = json{{"kind", "oriented"}, {"valid", ok}};
            text << "oriented perspective: " << (ok ? "valid" : "INVALID") << '\n';
            if (!ok) {
                report["circuit"] = io::signed_subset_json(check.witness->circuit);
                report["cocircuit"] = io::signed_subset_json(check.witness->cocircuit);
                text << "circuit " << format_signed(check.witness->circuit)
                     << " has a conformal intersection with cocircuit "
                     << format_signed(check.witness->cocircuit) << '\n';
            }
        } else {
            auto to_matroid = [](Instance& inst) {
                if (auto* om = std::get_if<OrientedMatroid>(&inst)) return om->underlying();
                return std::get<Matroid>(std::move(inst));
            };
            const Matroid ma = to_matroid(a), mb = to_matroid(b);
            auto check = is_matroid_perspective(ma, mb);
            ok = check.ok;
            report = json{{"kind", "matroid"}, {"valid", ok}};
            text << "matroid perspective: " << (ok ? "valid" : "INVALID") << '\n';
            if (!ok) {
                report["circuit"] = json(labels_of(ma.ground(), check.witness->circuit));
                report["cocircuit"] = json(labels_of(mb.ground(), check.witness->cocircuit));
                text << "circuit " << format_set(ma.ground(), check.witness->circuit)
                     << " meets cocircuit " << format_set(mb.ground(), check.witness->cocircuit)
                     << " in exactly one element\n";
            }
        }
    } else {
        // Single spec: a named or minor perspective; construction validates.
        resolve_perspective(specs);
        ok = true;
        report = json{{"valid", true}};
        text << "perspective: valid\n";
    }
    emit(opt, report, text.str());
    return ok ? 0 : 1;
}

int cmd_tutte(const Options& opt, const std::vector<std::string>& specs,
              const std::string& formula, bool verify) {
    const Perspective p = resolve_perspective(specs);
    MultiPoly poly;
    if (formula == "rank") {
        poly = tutte_rank_def(p.matroid(), opt.size_guard);
    } else if (formula == "orient") {
        poly = tutte_orientation_activity(p.om(), opt.size_guard);
    } else if (formula == "orient4") {
        poly = tutte_orientation_4var(p.om(), opt.size_guard);
    } else if (formula == "subset") {
        poly = tutte_subset_activity(p.matroid(), opt.size_guard);
    } else if (formula == "subset5") {
        poly = tutte_subset_5var(p.matroid(), opt.size_guard);
    } else {
        throw ParseError("unknown formula '" + formula + "'");
    }
    emit(opt, io::poly_json(poly), poly.str() + "\n");
    if (verify) {
        const auto report = verify_identities(p.om(), opt.verify_guard);
        emit(opt, io::verification_json(report), io::verification_text(report));
        return report.all_pass() ? 0 : 1;
    }
    return 0;
}

int cmd_classes(const Options& opt, const std::vector<std::string>& specs) {
    const Perspective p = resolve_perspective(specs);
    const auto classes = classify_reorientations(p.om(), opt.size_guard);
    emit(opt, io::classes_json(classes, p.om().ground()),
         io::classes_text(classes, p.om().ground()));
    return 0;
}

int cmd_partition(const Options& opt, const std::vector<std::string>& specs,
                  const std::string& reorient_csv) {
    const Perspective p = resolve_perspective(specs);
    const Mask a = parse_label_set(p.om().ground(), reorient_csv);
    const auto part = active_partition(p.om(), a);
    emit(opt, io::partition_json(part, p.om().ground()),
         io::partition_text(part, p.om().ground()));
    return 0;
}

int cmd_census(const Options& opt, const std::vector<std::string>& specs) {
    const Perspective p = resolve_perspective(specs);
    const auto record = reorientation_census(p.om(), opt.size_guard);
    emit(opt, io::census_json(record), io::census_text(record));
    return 0;
}

int cmd_verify(const Options& opt, const std::vector<std::string>& specs, bool corpus,
               std::uint32_t seed, int count) {
    if (corpus) {
        const auto run = io::run_corpus_verification(seed, count, opt.verify_guard);
        emit(opt, io::corpus_run_json(run), io::corpus_run_text(run));
        return run.all_pass() ? 0 : 1;
    }
    const Perspective p = resolve_perspective(specs);
    const auto report = verify_identities(p.om(), opt.verify_guard);
    emit(opt, io::verification_json(report), io::verification_text(report));
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact oriented-matroid perspective computations"};
    app.require_subcommand(1);

    Options opt;
    bool guard_set = false;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    auto* guard_opt =
        app.add_option("--size-guard", opt.size_guard, "max ground size for 2^E enumerations");

    std::vector<std::string> specs;
    std::string formula = "rank";
    std::string reorient_csv;
    bool verify_flag = false, corpus_flag = false;
    std::uint32_t seed = 0;
    int count = 50;

    auto* check = app.add_subcommand("check", "validate a perspective");
    check->add_option("instance", specs, "one perspective or two instances")
        ->expected(1, 2)
        ->required();

    auto* tutte = app.add_subcommand("tutte", "compute a Tutte polynomial");
    tutte->add_option("instance", specs, "one perspective or two instances")
        ->expected(1, 2)
        ->required();
    tutte->add_option("--formula", formula, "rank|orient|orient4|subset|subset5")
        ->check(CLI::IsMember({"rank", "orient", "orient4", "subset", "subset5"}))
        ->capture_default_str();
    tutte->add_flag("--verify", verify_flag, "also run the identity suite");

    auto* classes = app.add_subcommand("classes", "activity classes of 2^E");
    classes->add_option("instance", specs)->expected(1, 2)->required();

    auto* partition = app.add_subcommand("partition", "active partition");
    partition->add_option("instance", specs)->expected(1, 2)->required();
    partition->add_option("--reorient", reorient_csv, "comma-separated labels to reorient");

    auto* census = app.add_subcommand("census", "reorientation census vs Tutte evaluations");
    census->add_option("instance", specs)->expected(1, 2)->required();

    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("instance", specs)->expected(0, 2);
    verify->add_flag("--corpus", corpus_flag, "run over the built-in and generated corpus");
    verify->add_option("--seed", seed, "corpus generator seed")->capture_default_str();
    verify->add_option("--count", count, "number of generated perspectives")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    guard_set = guard_opt->count() > 0;
    if (!guard_set) {
        if (const char* env = std::getenv("OMACT_SIZE_GUARD")) {
            opt.size_guard = std::atoi(env);
            guard_set = true;
        }
    }
    opt.verify_guard = guard_set ? opt.size_guard : kVerifySizeGuard;

    try {
        if (check->parsed()) return cmd_check(opt, specs);
        if (tutte->parsed()) return cmd_tutte(opt, specs, formula, verify_flag);
        if (classes->parsed()) return cmd_classes(opt, specs);
        if (partition->parsed()) return cmd_partition(opt, specs, reorient_csv);
        if (census->parsed()) return cmd_census(opt, specs);
        if (verify->parsed()) {
            if (!corpus_flag && specs.empty())
                throw ParseError("verify needs an instance or --corpus");
            return cmd_verify(opt, specs, corpus_flag, seed, count);
        }
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const CapabilityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const AmbientMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
