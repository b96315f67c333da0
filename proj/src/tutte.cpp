#include "omact/tutte.hpp"

#include <algorithm>
#include <sstream>

#include "omact/subsets.hpp"

namespace omact {

namespace {

void check_guard(int n, int size_guard, const char* what) {
    if (n > size_guard)
        throw SizeGuardError(std::string(what) + " needs 2^" + std::to_string(n) +
                             " subsets; guard is " + std::to_string(size_guard));
}

std::vector<int> rank_table(const Matroid& m) {
    const Mask full = m.ground().full_mask();
    std::vector<int> table(std::size_t{1} << m.size());
    for (Mask a = 0;; ++a) {
        table[a] = m.rank(a);
        if (a == full) break;
    }
    return table;
}

ExpVec exps(int x, int y, int z, int u, int v) { return ExpVec{x, y, z, u, v}; }

MultiPoly rank_def_sum(const MatroidPerspective& p) {
    const Mask full = p.ground().full_mask();
    const auto rm = rank_table(p.m());
    const auto rn = rank_table(p.n());
    const int rank_m = p.m().rank(), rank_n = p.n().rank();

    // Group the 2^E sum by exponent triple before expanding the binomials.
    std::map<std::array<int, 3>, long long> counts;
    for (Mask a = 0;; ++a) {
        const int i = rank_n - rn[a];
        const int j = set_size(a) - rm[a];
        const int k = (rank_m - rank_n) - (rm[a] - rn[a]);
        ++counts[{i, j, k}];
        if (a == full) break;
    }
    const MultiPoly xm1 = MultiPoly::variable(Var::x) - MultiPoly(1);
    const MultiPoly ym1 = MultiPoly::variable(Var::y) - MultiPoly(1);
    std::vector<MultiPoly> xp{MultiPoly(1)}, yp{MultiPoly(1)};
    MultiPoly out;
    for (const auto& [e, count] : counts) {
        while (static_cast<int>(xp.size()) <= e[0]) xp.push_back(xp.back() * xm1);
        while (static_cast<int>(yp.size()) <= e[1]) yp.push_back(yp.back() * ym1);
        out += xp[e[0]] * yp[e[1]] * MultiPoly::monomial(exps(0, 0, e[2], 0, 0), count);
    }
    return out;
}

MultiPoly orientation_activity_sum(const OMPerspective& p) {
    const Mask full = p.ground().full_mask();
    MultiPoly out;
    for (Mask a = 0;; ++a) {
        const int ostar = set_size(dual_active_elements(p.n(), a));
        const int o = set_size(active_elements(p.m(), a));
        out += MultiPoly::monomial(exps(ostar, o, 0, 0, 0),
                                   Rational(1, 1LL << (ostar + o)));
        if (a == full) break;
    }
    return out;
}

MultiPoly orientation_4var_sum(const OMPerspective& p) {
    const Mask full = p.ground().full_mask();
    MultiPoly out;
    for (Mask a = 0;; ++a) {
        const ThetaSets t = theta(p, a);
        out += MultiPoly::monomial(exps(set_size(t.theta_star), set_size(t.theta), 0,
                                        set_size(t.theta_star_bar), set_size(t.theta_bar)),
                                   1);
        if (a == full) break;
    }
    return out;
}

MultiPoly subset_activity_sum(const MatroidPerspective& p) {
    const Mask full = p.ground().full_mask();
    MultiPoly out;
    for (Mask b = 0;; ++b) {
        if (p.m().independent(b) && p.n().spanning(b)) {
            out += MultiPoly::monomial(exps(set_size(internally_active(p.n(), b)),
                                            set_size(externally_active(p.m(), b)),
                                            rank_codefect(p, b), 0, 0),
                                       1);
        }
        if (b == full) break;
    }
    return out;
}

MultiPoly subset_5var_sum(const MatroidPerspective& p) {
    const Mask full = p.ground().full_mask();
    MultiPoly out;
    for (Mask a = 0;; ++a) {
        out += MultiPoly::monomial(exps(set_size(internally_active(p.n(), a)),
                                        set_size(externally_active(p.m(), a)),
                                        rank_codefect(p, a), set_size(p_set(p.n(), a)),
                                        set_size(q_set(p.m(), a))),
                                   1);
        if (a == full) break;
    }
    return out;
}

MultiPoly substituted(const MultiPoly& base, bool shift_x, bool shift_y,
                      std::optional<long long> z_value = std::nullopt) {
    std::map<Var, MultiPoly> repl;
    if (shift_x) repl.emplace(Var::x, MultiPoly::variable(Var::x) + MultiPoly::variable(Var::u));
    if (shift_y) repl.emplace(Var::y, MultiPoly::variable(Var::y) + MultiPoly::variable(Var::v));
    if (z_value) repl.emplace(Var::z, MultiPoly(*z_value));
    return base.substitute(repl);
}

void assert_equal(const MultiPoly& got, const MultiPoly& expected, const char* what) {
    if (got != expected)
        throw InternalCheckError(std::string(what) + " disagrees with the rank route: " +
                                 poly_diff_detail(got, expected));
}

long long integer_eval(const MultiPoly& poly, long long x, long long y) {
    const Rational value =
        poly.eval({Rational(x), Rational(y), Rational(1), Rational(0), Rational(0)});
    if (!value.is_integer())
        throw InternalCheckError("non-integer Tutte evaluation");
    return value.numerator();
}

}  // namespace

MultiPoly tutte_rank_def(const MatroidPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "rank-definition sum");
    MultiPoly out = rank_def_sum(p);
    if (!out.integer_coefficients())
        throw InternalCheckError("rank-definition polynomial has a non-integer coefficient");
    return out;
}

MultiPoly tutte_orientation_activity(const OMPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "orientation-activity sum");
    MultiPoly out = orientation_activity_sum(p);
    if (!out.integer_coefficients())
        throw InternalCheckError("orientation-activity polynomial has a non-integer coefficient");
    assert_equal(out, substituted(rank_def_sum(p.underlying()), false, false, 1),
                 "orientation-activity formula");
    return out;
}

MultiPoly tutte_orientation_4var(const OMPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "orientation 4-variable sum");
    MultiPoly out = orientation_4var_sum(p);
    assert_equal(out, substituted(rank_def_sum(p.underlying()), true, true, 1),
                 "orientation 4-variable formula");
    return out;
}

MultiPoly tutte_subset_activity(const MatroidPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "subset-activity sum");
    MultiPoly out = subset_activity_sum(p);
    assert_equal(out, rank_def_sum(p), "subset-activity formula");
    return out;
}

MultiPoly tutte_subset_5var(const MatroidPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "subset 5-variable sum");
    MultiPoly out = subset_5var_sum(p);
    assert_equal(out, substituted(rank_def_sum(p), true, true), "subset 5-variable formula");
    return out;
}

CoefficientTable coefficient_table(const OMPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "coefficient table");
    const MultiPoly t3 = substituted(rank_def_sum(p.underlying()), false, false, 1);

    CoefficientTable from_poly;
    for (const auto& [e, c] : t3.terms()) {
        if (!c.is_integer()) throw InternalCheckError("non-integer Tutte coefficient");
        from_poly[{e[static_cast<int>(Var::x)], e[static_cast<int>(Var::y)]}] = c.numerator();
    }

    CoefficientTable from_classes;
    for (const auto& cls : classify_reorientations(p, size_guard).classes)
        ++from_classes[{cls.iota, cls.epsilon}];

    CoefficientTable from_fixed;
    const Mask full = p.ground().full_mask();
    for (Mask a = 0;; ++a) {
        const ThetaSets t = theta(p, a);
        if (t.theta_bar == 0 && t.theta_star_bar == 0)
            ++from_fixed[{set_size(t.theta_star), set_size(t.theta)}];
        if (a == full) break;
    }

    if (from_poly != from_classes)
        throw InternalCheckError("coefficient table disagrees with activity-class counts");
    if (from_poly != from_fixed)
        throw InternalCheckError("coefficient table disagrees with active-fixed counts");
    return from_poly;
}

CensusRecord reorientation_census(const OMPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "reorientation census");
    const MultiPoly t3 = substituted(rank_def_sum(p.underlying()), false, false, 1);
    const Mask full = p.ground().full_mask();

    struct RowSpec {
        const char* condition;
        int x, y;
        // Which constraints apply to each A: -1 any, 0 forbidden, 1 required.
        int acyclic, totally_cyclic, active_fixed, dual_active_fixed;
        bool classes;  // condition is class-invariant (ignores the fixed flags)
    };
    // Conditions and evaluation points of the census table.
    const RowSpec specs[] = {
        {"no-condition", 2, 2, -1, -1, -1, -1, false},
        {"acyclic", 2, 0, 1, -1, -1, -1, false},
        {"totally-cyclic", 0, 2, -1, 1, -1, -1, false},
        {"acyclic-and-dual-active-fixed", 1, 0, 1, -1, -1, 1, true},
        {"active-fixed-and-totally-cyclic", 0, 1, -1, 1, 1, -1, true},
        {"active-fixed", 2, 1, -1, -1, 1, -1, false},
        {"dual-active-fixed", 1, 2, -1, -1, -1, 1, false},
        {"active-fixed-and-dual-active-fixed", 1, 1, -1, -1, 1, 1, true},
        {"acyclic-and-totally-cyclic", 0, 0, 1, 1, -1, -1, true},
    };

    CensusRecord record;
    for (const auto& spec : specs) {
        long long count = 0;
        for (Mask a = 0;; ++a) {
            const Mask o = active_elements(p.m(), a);
            const Mask ostar = dual_active_elements(p.n(), a);
            const bool acyclic = o == 0;
            const bool totally_cyclic = ostar == 0;
            const bool active_fixed = (o & a) == 0;
            const bool dual_active_fixed = (ostar & a) == 0;
            auto match = [](int want, bool have) { return want < 0 || (want == 1) == have; };
            if (match(spec.acyclic, acyclic) && match(spec.totally_cyclic, totally_cyclic) &&
                match(spec.active_fixed, active_fixed) &&
                match(spec.dual_active_fixed, dual_active_fixed))
                ++count;
            if (a == full) break;
        }

        CensusRow row;
        row.condition = spec.condition;
        row.x = spec.x;
        row.y = spec.y;
        row.reorientation_count = count;
        row.tutte_value = integer_eval(t3, spec.x, spec.y);
        if (row.reorientation_count != row.tutte_value)
            throw InternalCheckError("census row '" + row.condition +
                                     "' disagrees with t(" + std::to_string(spec.x) + "," +
                                     std::to_string(spec.y) + ",1)");

        if (spec.classes) {
            long long classes = 0;
            for (const auto& cls : classify_reorientations(p, size_guard).classes) {
                const bool acyclic = cls.epsilon == 0;
                const bool totally_cyclic = cls.iota == 0;
                auto match = [](int want, bool have) { return want < 0 || (want == 1) == have; };
                if (match(spec.acyclic, acyclic) && match(spec.totally_cyclic, totally_cyclic))
                    ++classes;
            }
            row.class_count = classes;
            if (classes != row.tutte_value)
                throw InternalCheckError("census class count '" + row.condition +
                                         "' disagrees with its Tutte evaluation");
        }
        record.rows.push_back(std::move(row));
    }
    return record;
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VerificationReport verify_identities(const OMPerspective& p, int size_guard) {
    check_guard(p.size(), size_guard, "identity verification");
    const MatroidPerspective& up = p.underlying();
    const Mask full = p.ground().full_mask();

    VerificationReport report;
    auto add = [&report](std::string name, const MultiPoly& lhs, const MultiPoly& rhs) {
        report.checks.push_back(IdentityCheck{std::move(name), lhs == rhs,
                                              lhs == rhs ? "" : poly_diff_detail(lhs, rhs)});
    };

    const MultiPoly rank3 = rank_def_sum(up);                       // x, y, z
    const MultiPoly rank2 = substituted(rank3, false, false, 1);    // at z = 1
    const MultiPoly orient2 = orientation_activity_sum(p);
    const MultiPoly orient4 = orientation_4var_sum(p);
    const MultiPoly subset3 = subset_activity_sum(up);
    const MultiPoly subset5 = subset_5var_sum(up);

    add("rank-def[z=1] == orientation-activity", rank2, orient2);
    add("rank-def == subset-activity", rank3, subset3);
    add("orientation-4var == rank-def[z=1][x->x+u,y->y+v]", orient4,
        substituted(rank3, true, true, 1));
    add("subset-5var == rank-def[x->x+u,y->y+v]", subset5, substituted(rank3, true, true));
    {
        std::map<Var, MultiPoly> drop_uv{{Var::u, MultiPoly(0)}, {Var::v, MultiPoly(0)}};
        add("subset-5var[u=0,v=0] == subset-activity", subset5.substitute(drop_uv), subset3);
        std::map<Var, MultiPoly> to_rank{
            {Var::x, MultiPoly(1)},
            {Var::u, MultiPoly::variable(Var::x) - MultiPoly(1)},
            {Var::y, MultiPoly(1)},
            {Var::v, MultiPoly::variable(Var::y) - MultiPoly(1)}};
        add("subset-5var[x=1,u=x-1,y=1,v=y-1] == rank-def", subset5.substitute(to_rank), rank3);
    }

    // Expansions in the four Θ-parameters.
    {
        const MultiPoly xm1 = MultiPoly::variable(Var::x) - MultiPoly(1);
        const MultiPoly ym1 = MultiPoly::variable(Var::y) - MultiPoly(1);
        MultiPoly shifted, fixed_only;
        long long alternating = 0;
        for (Mask a = 0;; ++a) {
            const ThetaSets t = theta(p, a);
            const int ts = set_size(t.theta_star), th = set_size(t.theta);
            shifted += xm1.pow(ts) * ym1.pow(th);
            if (t.theta_star_bar == 0 && t.theta_bar == 0)
                fixed_only += MultiPoly::monomial(ExpVec{ts, th, 0, 0, 0}, 1);
            alternating += ((ts + th) % 2 == 0) ? 1 : -1;
            if (a == full) break;
        }
        add("rank-def[z=1] == sum (x-1)^th* (y-1)^th", rank2, shifted);
        add("rank-def[z=1] == active-fixed sum x^th* y^th", rank2, fixed_only);

        const long long at_origin = integer_eval(rank2, 0, 0);
        report.checks.push_back(IdentityCheck{
            "t(0,0,1) == alternating theta sum", at_origin == alternating,
            at_origin == alternating
                ? ""
                : "t(0,0,1) = " + std::to_string(at_origin) + " but the sum is " +
                      std::to_string(alternating)});
    }

    // Formal derivative identities, bounded by the degrees that can survive.
    {
        const int p_max = up.n().rank();
        const int q_max = p.size() - up.m().rank();
        for (int dp = 0; dp <= p_max; ++dp) {
            for (int dq = 0; dq <= q_max; ++dq) {
                MultiPoly rhs;
                for (Mask a = 0;; ++a) {
                    const ThetaSets t = theta(p, a);
                    if (set_size(t.theta_star_bar) == dp && set_size(t.theta_bar) == dq)
                        rhs += MultiPoly::monomial(
                            ExpVec{set_size(t.theta_star), set_size(t.theta), 0, 0, 0}, 1);
                    if (a == full) break;
                }
                long long factorial = 1;
                for (int i = 2; i <= dp; ++i) factorial *= i;
                for (int i = 2; i <= dq; ++i) factorial *= i;
                const MultiPoly lhs = rank2.derivative(Var::x, dp).derivative(Var::y, dq);
                add("derivative p=" + std::to_string(dp) + ",q=" + std::to_string(dq), lhs,
                    rhs * MultiPoly(factorial));
            }
        }
    }
    return report;
}

}  // namespace omact
