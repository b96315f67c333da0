#include "omact/oriented.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "linalg.hpp"

namespace omact {

namespace {

// Sign completion on a fixed support: the unique (up to negation) sign
// pattern orthogonal to every given circuit, or nothing if zero / several
// exist. The returned representative carries + on the support minimum.
std::optional<SignedSubset> complete_orthogonal(const GroundSet& ground, Mask support,
                                                const std::vector<SignedSubset>& circuits,
                                                bool& ambiguous) {
    ambiguous = false;
    std::vector<int> others;
    const int lead = min_element(support);
    for (int e = lead + 1; e < ground.size(); ++e)
        if (contains(support, e)) others.push_back(e);

    std::optional<SignedSubset> found;
    const Mask variants = others.empty() ? 1 : (Mask{1} << others.size());
    for (Mask choice = 0; choice < variants; ++choice) {
        Mask pos = single(lead), neg = 0;
        for (std::size_t i = 0; i < others.size(); ++i) {
            if (contains(choice, static_cast<int>(i)))
                neg |= single(others[i]);
            else
                pos |= single(others[i]);
        }
        bool ortho = true;
        for (const auto& c : circuits) {
            const Mask common = c.support() & support;
            if (common == 0) continue;
            const Mask agree = (c.pos() & pos) | (c.neg() & neg);
            const Mask disagree = (c.pos() & neg) | (c.neg() & pos);
            if (agree == 0 || disagree == 0) {
                ortho = false;
                break;
            }
        }
        if (!ortho) continue;
        if (found) {
            ambiguous = true;
            return std::nullopt;
        }
        found = SignedSubset(ground, pos, neg);
    }
    return found;
}

std::vector<Mask> supports_of(const std::vector<SignedSubset>& family) {
    std::vector<Mask> out;
    out.reserve(family.size());
    for (const auto& s : family) out.push_back(s.support());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Support-level circuit axioms: nonempty, antichain, weak elimination.
void check_circuit_axioms(const GroundSet& ground, const std::vector<Mask>& supports) {
    for (Mask s : supports)
        if (s == 0) throw ValidationError("empty circuit");
    for (Mask s1 : supports) {
        for (Mask s2 : supports) {
            if (s1 == s2) continue;
            if ((s1 & s2) == s1)
                throw ValidationError("circuit " + format_set(ground, s1) +
                                      " is contained in circuit " + format_set(ground, s2));
        }
    }
    for (Mask s1 : supports) {
        for (Mask s2 : supports) {
            if (s1 >= s2) continue;
            for (Mask rest = s1 & s2; rest;) {
                const Mask e = rest & (~rest + 1);
                rest ^= e;
                const Mask target = (s1 | s2) & ~e;
                bool found = false;
                for (Mask s3 : supports) {
                    if ((s3 & ~target) == 0) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    throw ValidationError("circuit elimination fails for " +
                                          format_set(ground, s1) + " and " +
                                          format_set(ground, s2));
            }
        }
    }
}

Matroid matroid_from_circuit_supports(const GroundSet& ground,
                                      const std::vector<Mask>& supports) {
    const Mask full = ground.full_mask();
    auto independent = [&](Mask a) {
        for (Mask s : supports)
            if ((s & ~a) == 0) return false;
        return true;
    };
    int r = 0;
    std::vector<Mask> independents;
    for (Mask a = 0;; ++a) {
        if (independent(a)) {
            independents.push_back(a);
            r = std::max(r, set_size(a));
        }
        if (a == full) break;
    }
    std::vector<Mask> bases;
    for (Mask a : independents)
        if (set_size(a) == r) bases.push_back(a);
    return Matroid(ground, std::move(bases));
}

}  // namespace

OrientedMatroid::OrientedMatroid(GroundSet ground, std::vector<SignedSubset> circuits,
                                 std::vector<SignedSubset> cocircuits, Matroid underlying)
    : ground_(std::move(ground)),
      circuits_(std::move(circuits)),
      cocircuits_(std::move(cocircuits)),
      underlying_(std::move(underlying)) {
    std::sort(circuits_.begin(), circuits_.end(), signed_less);
    std::sort(cocircuits_.begin(), cocircuits_.end(), signed_less);
    validate();
}

void OrientedMatroid::validate() const {
    require_same_ground(ground_, underlying_.ground());
    auto check_family = [this](const std::vector<SignedSubset>& family,
                               const std::vector<Mask>& expected_supports, const char* what) {
        for (const auto& s : family) {
            require_same_ground(s.ground(), ground_);
            if (!std::binary_search(family.begin(), family.end(), s.negated(), signed_less))
                throw InternalCheckError(std::string(what) + " family not closed under negation");
        }
        for (std::size_t i = 0; i + 1 < family.size(); ++i) {
            if (family[i].support() == family[i + 1].support() &&
                family[i] != family[i + 1].negated())
                throw ValidationError("two distinct " + std::string(what) +
                                      "s share support " +
                                      format_set(ground_, family[i].support()));
        }
        if (supports_of(family) != expected_supports)
            throw InternalCheckError(std::string(what) +
                                     " supports disagree with the underlying matroid");
    };
    check_family(circuits_, underlying_.circuits(), "circuit");
    check_family(cocircuits_, underlying_.cocircuits(), "cocircuit");
    for (const auto& c : circuits_)
        for (const auto& d : cocircuits_)
            if (!is_orthogonal(c, d))
                throw InternalCheckError("circuit " + format_signed(c) +
                                         " not orthogonal to cocircuit " + format_signed(d));
}

OrientedMatroid OrientedMatroid::finish(const GroundSet& ground,
                                        std::vector<SignedSubset> circuit_pairs,
                                        Matroid underlying) {
    std::vector<SignedSubset> cocircuits;
    for (Mask support : underlying.cocircuits()) {
        bool ambiguous = false;
        auto rep = complete_orthogonal(ground, support, circuit_pairs, ambiguous);
        if (!rep)
            throw ValidationError(
                "orthogonality completion failed on cocircuit support " +
                format_set(ground, support) +
                (ambiguous ? ": several sign patterns fit" : ": no sign pattern fits"));
        cocircuits.push_back(*rep);
        cocircuits.push_back(rep->negated());
    }
    return OrientedMatroid(ground, std::move(circuit_pairs), std::move(cocircuits),
                           std::move(underlying));
}

OrientedMatroid OrientedMatroid::from_circuits(const GroundSet& ground,
                                               const std::vector<SignedSubset>& circuit_reps) {
    // Close under negation; reject distinct signatures on one support.
    std::map<Mask, SignedSubset> by_support;
    for (const auto& rep : circuit_reps) {
        require_same_ground(rep.ground(), ground);
        if (rep.empty()) throw ValidationError("empty circuit");
        auto it = by_support.find(rep.support());
        if (it == by_support.end()) {
            by_support.emplace(rep.support(), rep);
        } else if (it->second != rep && it->second != rep.negated()) {
            throw ValidationError("two distinct circuits share support " +
                                  format_set(ground, rep.support()));
        }
    }
    std::vector<Mask> supports;
    std::vector<SignedSubset> pairs;
    for (const auto& [s, rep] : by_support) {
        supports.push_back(s);
        pairs.push_back(rep);
        pairs.push_back(rep.negated());
    }
    check_circuit_axioms(ground, supports);
    Matroid underlying = matroid_from_circuit_supports(ground, supports);
    if (underlying.circuits() != supports)
        throw InternalCheckError("circuit supports do not reproduce from the derived matroid");
    return finish(ground, std::move(pairs), std::move(underlying));
}

OrientedMatroid OrientedMatroid::from_matrix(const std::vector<std::vector<Rational>>& rows,
                                             const std::vector<std::string>& labels) {
    const int n = static_cast<int>(labels.size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("matrix row width differs from the label count");
    GroundSet ground(labels);

    auto columns = [&](Mask sel) {
        linalg::Matrix m(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (int c = 0; c < n; ++c)
                if (contains(sel, c)) m[r].push_back(rows[r][c]);
        return m;
    };
    auto rank_of = [&](Mask sel) {
        if (sel == 0 || rows.empty()) return 0;
        return linalg::rank_of(columns(sel));
    };

    const Mask full = ground.full_mask();
    const int r = rank_of(full);
    std::vector<Mask> bases;
    for (Mask a = 0;; ++a) {
        if (set_size(a) == r && rank_of(a) == r) bases.push_back(a);
        if (a == full) break;
    }
    Matroid underlying(ground, std::move(bases));

    std::vector<SignedSubset> pairs;
    for (Mask support : underlying.circuits()) {
        Mask pos = 0, neg = 0;
        if (rows.empty() || rank_of(support) == 0) {
            // Zero columns: the singleton support is its own kernel.
            pos = support;
        } else {
            const auto x = linalg::kernel_vector(columns(support));
            int j = 0;
            for (int e = 0; e < n; ++e) {
                if (!contains(support, e)) continue;
                const Rational& entry = x[j++];
                if (entry.is_zero())
                    throw InternalCheckError("kernel vector vanishes on a circuit support");
                (Rational(0) < entry ? pos : neg) |= single(e);
            }
            if (!contains(pos, min_element(support))) std::swap(pos, neg);
        }
        pairs.emplace_back(ground, pos, neg);
        pairs.push_back(pairs.back().negated());
    }
    return finish(ground, std::move(pairs), std::move(underlying));
}

OrientedMatroid OrientedMatroid::from_digraph(const Digraph& g) {
    if (g.arcs.empty()) throw ValidationError("digraph has no arcs");
    std::vector<std::string> labels;
    std::vector<std::string> vertices;
    auto vertex_id = [&vertices](const std::string& name) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        vertices.push_back(name);
        return static_cast<int>(vertices.size()) - 1;
    };
    std::vector<std::pair<int, int>> ends;
    for (const auto& arc : g.arcs) {
        labels.push_back(arc.label);
        ends.emplace_back(vertex_id(arc.tail), vertex_id(arc.head));
    }
    // Vertex-arc incidence: +1 at the head, -1 at the tail; loops give a
    // zero column, hence a singleton circuit.
    std::vector<std::vector<Rational>> rows(vertices.size(),
                                            std::vector<Rational>(labels.size(), Rational(0)));
    for (std::size_t a = 0; a < ends.size(); ++a) {
        const auto [tail, head] = ends[a];
        if (tail == head) continue;
        rows[head][a] += 1;
        rows[tail][a] -= 1;
    }
    return from_matrix(rows, labels);
}

OrientedMatroid OrientedMatroid::reorient(Mask a) const {
    if (a & ~ground_.full_mask())
        throw AmbientMismatchError("reorientation set leaves the ground set");
    std::vector<SignedSubset> circuits, cocircuits;
    circuits.reserve(circuits_.size());
    cocircuits.reserve(cocircuits_.size());
    for (const auto& c : circuits_) circuits.push_back(c.reoriented(a));
    for (const auto& d : cocircuits_) cocircuits.push_back(d.reoriented(a));
    return OrientedMatroid(ground_, std::move(circuits), std::move(cocircuits), underlying_);
}

OrientedMatroid OrientedMatroid::dual() const {
    return OrientedMatroid(ground_, cocircuits_, circuits_, underlying_.dual());
}

std::vector<SignedSubset> OrientedMatroid::positive_circuits() const {
    std::vector<SignedSubset> out;
    for (const auto& c : circuits_)
        if (c.is_positive()) out.push_back(c);
    return out;
}

std::vector<SignedSubset> OrientedMatroid::positive_cocircuits() const {
    std::vector<SignedSubset> out;
    for (const auto& d : cocircuits_)
        if (d.is_positive()) out.push_back(d);
    return out;
}

bool OrientedMatroid::is_acyclic() const { return positive_circuits().empty(); }

bool OrientedMatroid::is_totally_cyclic() const { return positive_cocircuits().empty(); }

bool OrientedMatroid::operator==(const OrientedMatroid& o) const {
    return ground_ == o.ground_ && circuits_ == o.circuits_;
}

OMPerspectiveCheck is_om_perspective(const OrientedMatroid& m, const OrientedMatroid& n) {
    require_same_ground(m.ground(), n.ground());
    OMPerspectiveCheck result;
    result.ok = true;
    for (const auto& c : m.circuits()) {
        for (const auto& d : n.cocircuits()) {
            const Mask common = c.support() & d.support();
            if (common == 0) continue;
            const Mask disagree = (c.pos() & d.neg()) | (c.neg() & d.pos());
            if (disagree == 0) {
                result.ok = false;
                // Normalize the reported pair: + on the circuit minimum.
                if (!contains(c.pos(), min_element(c.support())))
                    result.witness = OMPerspectiveViolation{c.negated(), d.negated()};
                else
                    result.witness = OMPerspectiveViolation{c, d};
                break;
            }
        }
        if (!result.ok) break;
    }
    if (result.ok) {
        auto under = is_matroid_perspective(m.underlying(), n.underlying());
        if (!under.ok)
            throw InternalCheckError(
                "oriented perspective test passed but the underlying matroid test failed");
    }
    return result;
}

OMPerspective::OMPerspective(OrientedMatroid m, OrientedMatroid n)
    : m_(std::move(m)),
      n_(std::move(n)),
      underlying_((check_construction(), MatroidPerspective(m_.underlying(), n_.underlying()))) {}

void OMPerspective::check_construction() const {
    auto check = is_om_perspective(m_, n_);
    if (!check.ok)
        throw ValidationError("not an oriented matroid perspective: circuit " +
                              format_signed(check.witness->circuit) +
                              " has a non-empty conformal intersection with cocircuit " +
                              format_signed(check.witness->cocircuit));
}

OMPerspective OMPerspective::reorient(Mask a) const {
    return OMPerspective(m_.reorient(a), n_.reorient(a));
}

Digraph delete_arcs(const Digraph& g, Mask f) {
    Digraph out;
    for (std::size_t i = 0; i < g.arcs.size(); ++i)
        if (!contains(f, static_cast<int>(i))) out.arcs.push_back(g.arcs[i]);
    return out;
}

Digraph contract_arcs(const Digraph& g, Mask f) {
    // Union-find over vertex names; arcs of f that close a cycle act as loops
    // and contract to nothing.
    std::vector<std::string> names;
    std::vector<int> parent;
    auto id_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        names.push_back(name);
        parent.push_back(static_cast<int>(parent.size()));
        return static_cast<int>(names.size()) - 1;
    };
    std::function<int(int)> find = [&](int v) {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& arc : g.arcs) {
        id_of(arc.tail);
        id_of(arc.head);
    }
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        if (!contains(f, static_cast<int>(i))) continue;
        const int a = find(id_of(g.arcs[i].tail));
        const int b = find(id_of(g.arcs[i].head));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Digraph out;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        if (contains(f, static_cast<int>(i))) continue;
        const auto& arc = g.arcs[i];
        out.arcs.push_back(
            Arc{names[find(id_of(arc.tail))], names[find(id_of(arc.head))], arc.label});
    }
    return out;
}

OMPerspective digraph_minor_perspective(const Digraph& g, Mask f) {
    if (f & ~((g.arcs.empty() ? Mask{0} : (Mask{1} << g.arcs.size()) - 1)))
        throw ValidationError("minor arc set leaves the digraph");
    return OMPerspective(OrientedMatroid::from_digraph(delete_arcs(g, f)),
                         OrientedMatroid::from_digraph(contract_arcs(g, f)));
}

}  // namespace omact
