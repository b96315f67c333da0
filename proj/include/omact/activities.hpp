#pragma once

// Orientation activities of a perspective: active and dual-active elements,
// the vector closure V(M;e), the active filtration and partition, the four
// Θ-parameters, activity classes, canonical active-fixed representatives and
// the partition of 2^E into classes.

#include <vector>

#include "omact/oriented.hpp"

namespace omact {

struct Activities {
    Mask active = 0;       // O(M): minima of positive circuits
    Mask dual_active = 0;  // O*(M): minima of positive cocircuits
};

// Asserts O(M) ∩ O*(M) = ∅.
Activities activities(const OrientedMatroid& m);

// O(-_a M) and O*(-_a M) straight from the stored families, without building
// the reoriented matroid.
Mask active_elements(const OrientedMatroid& m, Mask a = 0);
Mask dual_active_elements(const OrientedMatroid& m, Mask a = 0);

// V(M;e): union of all positive circuits of M with minimum >= e.
Mask vector_closure(const OrientedMatroid& m, int e);

struct ActiveFiltration {
    std::vector<int> g_list;     // g_1 < ... < g_eps (= O(M))
    std::vector<int> h_list;     // h_1 < ... < h_iota (= O*(N))
    std::vector<Mask> g_sets;    // g_sets[k] = G_k, k = 0..eps, G_eps = ∅
    std::vector<Mask> h_sets;    // h_sets[k] = H_k, k = 0..iota, H_iota = E
    int epsilon() const { return static_cast<int>(g_list.size()); }
    int iota() const { return static_cast<int>(h_list.size()); }
};

struct ActivePartition {
    std::vector<Mask> cyclic_parts;   // minima ascending; minima = O(M)
    Mask hybrid_part = 0;             // H_0 \ G_0, possibly empty
    std::vector<Mask> acyclic_parts;  // minima ascending; minima = O*(N)
    Mask g0 = 0;                      // union of the cyclic parts
    Mask h0 = 0;                      // g0 ∪ hybrid part

    int epsilon() const { return static_cast<int>(cyclic_parts.size()); }
    int iota() const { return static_cast<int>(acyclic_parts.size()); }
    bool operator==(const ActivePartition& o) const;
    bool operator!=(const ActivePartition& o) const { return !(*this == o); }
};

// Filtration / partition of the a-reorientation of p (a = 0 gives p itself).
ActiveFiltration active_filtration(const OMPerspective& p, Mask a = 0);
ActivePartition active_partition(const OMPerspective& p, Mask a = 0);

struct ThetaSets {
    Mask theta_star = 0;      // Θ*_N(A) = O*(-_A N) \ A
    Mask theta_star_bar = 0;  // Θ̄*_N(A) = O*(-_A N) ∩ A
    Mask theta = 0;           // Θ_M(A) = O(-_A M) \ A
    Mask theta_bar = 0;       // Θ̄_M(A) = O(-_A M) ∩ A
};

ThetaSets theta(const OMPerspective& reference, Mask a);

// All 2^{iota+eps} symmetric differences of a with unions of cyclic/acyclic
// parts of the a-reorientation's active partition; sorted ascending; the
// hybrid part is never flipped.
std::vector<Mask> activity_class(const OMPerspective& p, Mask a);

// The unique member of activity_class(p, a) that is active-fixed and
// dual-active-fixed.
Mask canonical_representative(const OMPerspective& p, Mask a);

struct ActivityClass {
    Mask representative = 0;    // the active-fixed, dual-active-fixed member
    std::vector<Mask> members;  // ascending
    int iota = 0;               // |O*(-_A N)|
    int epsilon = 0;            // |O(-_A M)|
};

struct ReorientationClasses {
    std::vector<ActivityClass> classes;  // ordered by smallest member
};

// Partition of 2^E into activity classes. Enumerates subsets in increasing
// binary order and assigns each unseen subset its whole class at once.
ReorientationClasses classify_reorientations(const OMPerspective& p,
                                             int size_guard = kDefaultSizeGuard);

}  // namespace omact
