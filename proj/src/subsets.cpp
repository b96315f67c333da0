#include "omact/subsets.hpp"

#include <string>

namespace omact {

namespace {

void require_subset(const Matroid& m, Mask a) {
    if (a & ~m.ground().full_mask())
        throw AmbientMismatchError("subset leaves the ground set");
}

}  // namespace

Mask internally_active(const Matroid& m, Mask a) {
    require_subset(m, a);
    Mask out = 0;
    for (Mask d : m.cocircuits()) {
        const int e = min_element(d);
        if (contains(a, e) && (d & a) == single(e)) out |= single(e);
    }
    return out;
}

Mask externally_active(const Matroid& m, Mask a) {
    require_subset(m, a);
    Mask out = 0;
    for (Mask c : m.circuits()) {
        const int e = min_element(c);
        if (!contains(a, e) && (c & ~(a | single(e))) == 0) out |= single(e);
    }
    return out;
}

Mask p_set(const Matroid& m, Mask a) {
    require_subset(m, a);
    Mask out = 0;
    for (Mask d : m.cocircuits())
        if ((d & a) == 0) out |= single(min_element(d));
    if (set_size(out) != m.rank() - m.rank(a))
        throw InternalCheckError("|P_M(A)| differs from r(M) - r_M(A)");
    return out;
}

Mask q_set(const Matroid& m, Mask a) {
    require_subset(m, a);
    Mask out = 0;
    for (Mask c : m.circuits())
        if ((c & ~a) == 0) out |= single(min_element(c));
    if (set_size(out) != set_size(a) - m.rank(a))
        throw InternalCheckError("|Q_M(A)| differs from |A| - r_M(A)");
    return out;
}

int rank_codefect(const MatroidPerspective& p, Mask a) {
    require_subset(p.m(), a);
    const int value = (p.m().rank() - p.n().rank()) - (p.m().rank(a) - p.n().rank(a));
    if (value < 0)
        throw InternalCheckError("negative rank codefect on a validated perspective");
    return value;
}

std::vector<DawsonInterval> dawson_partition(const MatroidPerspective& p, int size_guard) {
    const int n = p.size();
    if (n > size_guard)
        throw SizeGuardError("interval partition needs 2^" + std::to_string(n) +
                             " subsets; guard is " + std::to_string(size_guard));
    const Mask full = p.ground().full_mask();
    std::vector<DawsonInterval> out;
    std::vector<bool> covered(std::size_t{1} << n, false);
    for (Mask b = 0;; ++b) {
        if (p.m().independent(b) && p.n().spanning(b)) {
            DawsonInterval iv;
            iv.base = b;
            iv.int_set = internally_active(p.n(), b);
            iv.ext_set = externally_active(p.m(), b);
            iv.lower = b & ~iv.int_set;
            iv.upper = b | iv.ext_set;
            const Mask free = iv.upper & ~iv.lower;
            for (Mask s = free;;) {
                const Mask member = iv.lower | s;
                if (covered[member]) throw InternalCheckError("intervals overlap");
                covered[member] = true;
                if (s == 0) break;
                s = (s - 1) & free;
            }
            out.push_back(iv);
        }
        if (b == full) break;
    }
    if (out.empty())
        throw ValidationError("no independent-in-M spanning-in-N subset exists");
    for (Mask a = 0;; ++a) {
        if (!covered[a])
            throw InternalCheckError("interval partition misses " + format_set(p.ground(), a));
        if (a == full) break;
    }
    return out;
}

IntervalLocation locate_interval(const MatroidPerspective& p, Mask a, int size_guard) {
    require_subset(p.m(), a);
    for (const auto& iv : dawson_partition(p, size_guard)) {
        if ((iv.lower & ~a) != 0 || (a & ~iv.upper) != 0) continue;
        IntervalLocation loc;
        loc.interval = iv;
        loc.p_coord = iv.int_set & ~a;
        loc.q_coord = iv.ext_set & a;
        if (internally_active(p.n(), a) != (iv.int_set & a))
            throw InternalCheckError("Int_N(A) != Int_N(B) ∩ A inside an interval");
        if (p_set(p.n(), a) != loc.p_coord)
            throw InternalCheckError("P_N(A) != Int_N(B) \\ A inside an interval");
        if (externally_active(p.m(), a) != (iv.ext_set & ~a))
            throw InternalCheckError("Ext_M(A) != Ext_M(B) \\ A inside an interval");
        if (q_set(p.m(), a) != loc.q_coord)
            throw InternalCheckError("Q_M(A) != Ext_M(B) ∩ A inside an interval");
        return loc;
    }
    throw InternalCheckError("no interval contains " + format_set(p.ground(), a));
}

}  // namespace omact
