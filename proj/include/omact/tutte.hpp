#pragma once

// The Tutte polynomial of a perspective through five independent formulas,
// coefficient/census extraction against activity classes, and the identity
// verification report. Each formula is computed from its own definition and
// cross-checked against the rank-function route before being returned.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omact/activities.hpp"
#include "omact/matroid.hpp"
#include "omact/oriented.hpp"
#include "omact/poly.hpp"

namespace omact {

// Σ_A (x-1)^{r(N)-r_N(A)} (y-1)^{|A|-r_M(A)} z^{rcd(A)}. Integer
// coefficients, asserted.
MultiPoly tutte_rank_def(const MatroidPerspective& p, int size_guard = kDefaultSizeGuard);

// Σ_A (x/2)^{|O*(-_A N)|} (y/2)^{|O(-_A M)|}; equals tutte_rank_def at z=1,
// asserted, and has integer coefficients despite the halves, asserted.
MultiPoly tutte_orientation_activity(const OMPerspective& p, int size_guard = kDefaultSizeGuard);

// Σ_A x^{|Θ*_N(A)|} u^{|Θ̄*_N(A)|} y^{|Θ_M(A)|} v^{|Θ̄_M(A)|}; equals the
// x→x+u, y→y+v substitution of tutte_rank_def at z=1, asserted.
MultiPoly tutte_orientation_4var(const OMPerspective& p, int size_guard = kDefaultSizeGuard);

// Σ over independent-in-M spanning-in-N subsets B of
// x^{|Int_N(B)|} y^{|Ext_M(B)|} z^{rcd(B)}; equals tutte_rank_def, asserted.
MultiPoly tutte_subset_activity(const MatroidPerspective& p, int size_guard = kDefaultSizeGuard);

// Σ_A x^{|Int_N(A)|} u^{|P_N(A)|} y^{|Ext_M(A)|} v^{|Q_M(A)|} z^{rcd(A)};
// equals the x→x+u, y→y+v substitution of tutte_rank_def, asserted.
MultiPoly tutte_subset_5var(const MatroidPerspective& p, int size_guard = kDefaultSizeGuard);

// t_{i,j}: coefficient of x^i y^j in the Tutte polynomial at z=1. Computed
// three ways — polynomial coefficient, activity-class count by (iota=i,
// epsilon=j), and count of active-fixed dual-active-fixed reorientations
// with those activities — and asserted equal.
using CoefficientTable = std::map<std::pair<int, int>, long long>;
CoefficientTable coefficient_table(const OMPerspective& p, int size_guard = kDefaultSizeGuard);

struct CensusRow {
    std::string condition;  // stable identifier, e.g. "acyclic"
    int x = 0, y = 0;       // evaluation point (x, y, 1)
    long long reorientation_count = 0;
    long long tutte_value = 0;
    // Count of whole activity classes matching the condition, for the rows
    // where the condition is class-invariant. Equals the same evaluation.
    std::optional<long long> class_count;
};

struct CensusRecord {
    std::vector<CensusRow> rows;
};

// Direct reorientation counts for each census condition, each asserted equal
// to the matching Tutte evaluation.
CensusRecord reorientation_census(const OMPerspective& p, int size_guard = kDefaultSizeGuard);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // empty on pass, diagnostic otherwise
};

struct VerificationReport {
    std::vector<IdentityCheck> checks;
    bool all_pass() const;
};

// Runs every identity the five formulas are expected to satisfy, including
// the activity-parameter expansions and the formal derivative identities for
// all p <= r(N), q <= |E| - r(M), and reports each with pass/fail.
VerificationReport verify_identities(const OMPerspective& p, int size_guard = kVerifySizeGuard);

}  // namespace omact
