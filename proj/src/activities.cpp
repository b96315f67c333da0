#include "omact/activities.hpp"

#include <algorithm>

namespace omact {

namespace {

// C is positive in -_a M iff no positive entry is flipped and every negative
// entry is.
inline bool positive_when_reoriented(const SignedSubset& c, Mask a) {
    return ((c.pos() & a) | (c.neg() & ~a)) == 0;
}

Mask minima_of_positive(const std::vector<SignedSubset>& family, Mask a) {
    Mask out = 0;
    for (const auto& c : family)
        if (positive_when_reoriented(c, a)) out |= single(min_element(c.support()));
    return out;
}

void validate_filtration(const ActiveFiltration& f, Mask full) {
    const int eps = f.epsilon();
    const int iota = f.iota();
    if (f.g_sets.back() != 0) throw InternalCheckError("G_eps must be empty");
    if (f.h_sets.back() != full) throw InternalCheckError("H_iota must be the ground set");
    for (int k = 1; k <= eps; ++k) {
        const Mask outer = f.g_sets[k - 1], inner = f.g_sets[k];
        if ((inner & ~outer) != 0 || inner == outer)
            throw InternalCheckError("G filtration is not strictly nested");
        if (min_element(outer & ~inner) != f.g_list[k - 1])
            throw InternalCheckError("g_k is not the minimum of G_{k-1} \\ G_k");
    }
    for (int k = 1; k <= iota; ++k) {
        const Mask outer = f.h_sets[k], inner = f.h_sets[k - 1];
        if ((inner & ~outer) != 0 || inner == outer)
            throw InternalCheckError("H filtration is not strictly nested");
        if (min_element(outer & ~inner) != f.h_list[k - 1])
            throw InternalCheckError("h_k is not the minimum of H_k \\ H_{k-1}");
    }
    if ((f.g_sets.front() & ~f.h_sets.front()) != 0)
        throw InternalCheckError("G_0 is not contained in H_0");
}

std::vector<int> elements_ascending(Mask m) {
    std::vector<int> out;
    for (Mask rest = m; rest;) {
        const Mask bit = rest & (~rest + 1);
        rest ^= bit;
        out.push_back(min_element(bit));
    }
    return out;
}

}  // namespace

Activities activities(const OrientedMatroid& m) {
    Activities out{active_elements(m, 0), dual_active_elements(m, 0)};
    if (out.active & out.dual_active)
        throw InternalCheckError("active and dual-active elements intersect");
    return out;
}

Mask active_elements(const OrientedMatroid& m, Mask a) {
    return minima_of_positive(m.circuits(), a);
}

Mask dual_active_elements(const OrientedMatroid& m, Mask a) {
    return minima_of_positive(m.cocircuits(), a);
}

Mask vector_closure(const OrientedMatroid& m, int e) {
    if (e < 0 || e >= m.size())
        throw AmbientMismatchError("vector closure element outside the ground set");
    Mask out = 0;
    for (const auto& c : m.circuits())
        if (c.is_positive() && min_element(c.support()) >= e) out |= c.support();
    return out;
}

ActiveFiltration active_filtration(const OMPerspective& p, Mask a) {
    const Mask full = p.ground().full_mask();
    if (a & ~full) throw AmbientMismatchError("reorientation set leaves the ground set");

    ActiveFiltration f;
    f.g_list = elements_ascending(active_elements(p.m(), a));
    f.h_list = elements_ascending(dual_active_elements(p.n(), a));
    const int eps = f.epsilon();
    const int iota = f.iota();

    // G_k = union of positive circuits of -_a M with minimum >= g_{k+1}.
    f.g_sets.assign(eps + 1, 0);
    for (int k = 0; k < eps; ++k) {
        Mask g = 0;
        for (const auto& c : p.m().circuits())
            if (positive_when_reoriented(c, a) && min_element(c.support()) >= f.g_list[k])
                g |= c.support();
        f.g_sets[k] = g;
    }
    // H_k = E minus the union of positive cocircuits of -_a N with minimum
    // >= h_{k+1}.
    f.h_sets.assign(iota + 1, full);
    for (int k = 0; k < iota; ++k) {
        Mask cut = 0;
        for (const auto& d : p.n().cocircuits())
            if (positive_when_reoriented(d, a) && min_element(d.support()) >= f.h_list[k])
                cut |= d.support();
        f.h_sets[k] = full & ~cut;
    }
    validate_filtration(f, full);
    return f;
}

ActivePartition active_partition(const OMPerspective& p, Mask a) {
    const ActiveFiltration f = active_filtration(p, a);
    ActivePartition out;
    for (int k = 1; k <= f.epsilon(); ++k)
        out.cyclic_parts.push_back(f.g_sets[k - 1] & ~f.g_sets[k]);
    for (int k = 1; k <= f.iota(); ++k)
        out.acyclic_parts.push_back(f.h_sets[k] & ~f.h_sets[k - 1]);
    out.g0 = f.g_sets.front();
    out.h0 = f.h_sets.front();
    out.hybrid_part = out.h0 & ~out.g0;

    Mask seen = out.hybrid_part;
    for (Mask part : out.cyclic_parts) {
        if (part == 0 || (part & seen)) throw InternalCheckError("active partition overlaps");
        seen |= part;
    }
    for (Mask part : out.acyclic_parts) {
        if (part == 0 || (part & seen)) throw InternalCheckError("active partition overlaps");
        seen |= part;
    }
    if (seen != p.ground().full_mask())
        throw InternalCheckError("active partition does not cover the ground set");
    return out;
}

bool ActivePartition::operator==(const ActivePartition& o) const {
    return cyclic_parts == o.cyclic_parts && hybrid_part == o.hybrid_part &&
           acyclic_parts == o.acyclic_parts && g0 == o.g0 && h0 == o.h0;
}

ThetaSets theta(const OMPerspective& reference, Mask a) {
    if (a & ~reference.ground().full_mask())
        throw AmbientMismatchError("reorientation set leaves the ground set");
    const Mask o = active_elements(reference.m(), a);
    const Mask ostar = dual_active_elements(reference.n(), a);
    return ThetaSets{ostar & ~a, ostar & a, o & ~a, o & a};
}

namespace {

std::vector<Mask> flippable_parts(const ActivePartition& part) {
    std::vector<Mask> parts = part.cyclic_parts;
    parts.insert(parts.end(), part.acyclic_parts.begin(), part.acyclic_parts.end());
    return parts;
}

}  // namespace

std::vector<Mask> activity_class(const OMPerspective& p, Mask a) {
    const auto parts = flippable_parts(active_partition(p, a));
    std::vector<Mask> members;
    members.reserve(std::size_t{1} << parts.size());
    for (Mask choice = 0; choice < (Mask{1} << parts.size()); ++choice) {
        Mask member = a;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (contains(choice, static_cast<int>(i))) member ^= parts[i];
        members.push_back(member);
    }
    std::sort(members.begin(), members.end());
    return members;
}

Mask canonical_representative(const OMPerspective& p, Mask a) {
    // Flip exactly the parts whose (dual-)active minimum lies inside a.
    Mask rep = a;
    for (Mask part : flippable_parts(active_partition(p, a)))
        if (contains(a, min_element(part))) rep ^= part;
    const ThetaSets t = theta(p, rep);
    if (t.theta_bar != 0 || t.theta_star_bar != 0)
        throw InternalCheckError("canonical representative is not active-fixed");
    return rep;
}

ReorientationClasses classify_reorientations(const OMPerspective& p, int size_guard) {
    const int n = p.size();
    if (n > size_guard)
        throw SizeGuardError("classification needs 2^" + std::to_string(n) +
                             " subsets; guard is " + std::to_string(size_guard));
    const Mask full = p.ground().full_mask();
    std::vector<bool> seen(std::size_t{1} << n, false);

    ReorientationClasses out;
    for (Mask a = 0;; ++a) {
        if (!seen[a]) {
            const ActivePartition part = active_partition(p, a);
            ActivityClass cls;
            cls.iota = part.iota();
            cls.epsilon = part.epsilon();
            cls.members = activity_class(p, a);
            cls.representative = canonical_representative(p, a);
            int fixed_members = 0;
            for (Mask member : cls.members) {
                if (seen[member])
                    throw InternalCheckError("activity classes overlap");
                seen[member] = true;
                const ThetaSets t = theta(p, member);
                if (t.theta_bar == 0 && t.theta_star_bar == 0) ++fixed_members;
            }
            if (fixed_members != 1)
                throw InternalCheckError("activity class lacks a unique active-fixed member");
            if (cls.members.size() != (std::size_t{1} << (cls.iota + cls.epsilon)))
                throw InternalCheckError("activity class size differs from 2^(iota+epsilon)");
            out.classes.push_back(std::move(cls));
        }
        if (a == full) break;
    }
    return out;
}

}  // namespace omact
