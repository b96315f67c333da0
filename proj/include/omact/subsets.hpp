#pragma once

// Internal/external activities of arbitrary subsets, the P/Q minima sets,
// the rank-difference codefect, the interval partition of 2^E indexed by
// independent-in-M spanning-in-N subsets, and interval location.

#include <vector>

#include "omact/matroid.hpp"

namespace omact {

// Int_M(A): elements e of A that are the minimum of a cocircuit contained in
// (E \ A) ∪ {e}.
Mask internally_active(const Matroid& m, Mask a);

// Ext_M(A): elements e outside A that are the minimum of a circuit contained
// in A ∪ {e}.
Mask externally_active(const Matroid& m, Mask a);

// P_M(A): minima of cocircuits contained in E \ A. |P_M(A)| = r(M) - r_M(A),
// asserted.
Mask p_set(const Matroid& m, Mask a);

// Q_M(A): minima of circuits contained in A. |Q_M(A)| = |A| - r_M(A),
// asserted.
Mask q_set(const Matroid& m, Mask a);

// r(M) - r(N) - (r_M(A) - r_N(A)); nonnegative for a perspective, asserted.
int rank_codefect(const MatroidPerspective& p, Mask a);

struct DawsonInterval {
    Mask base = 0;     // independent in M, spanning in N
    Mask int_set = 0;  // Int_N(base)
    Mask ext_set = 0;  // Ext_M(base)
    Mask lower = 0;    // base \ Int_N(base)
    Mask upper = 0;    // base ∪ Ext_M(base)
};

// The boolean intervals [base \ Int_N(base), base ∪ Ext_M(base)], one per
// independent-in-M spanning-in-N subset; validated to partition 2^E.
std::vector<DawsonInterval> dawson_partition(const MatroidPerspective& p,
                                             int size_guard = kDefaultSizeGuard);

struct IntervalLocation {
    DawsonInterval interval;
    Mask p_coord = 0;  // Int_N(base) \ A = P_N(A)
    Mask q_coord = 0;  // Ext_M(base) ∩ A = Q_M(A)
};

// The unique interval containing a, located by direct search over the
// partition, with the four coordinate relations asserted.
IntervalLocation locate_interval(const MatroidPerspective& p, Mask a,
                                 int size_guard = kDefaultSizeGuard);

}  // namespace omact
