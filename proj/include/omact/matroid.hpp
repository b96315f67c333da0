#pragma once

// Unoriented matroids given by their full basis list, with the rank oracle,
// circuits/cocircuits, duality, the matroid-perspective test and the
// delete/contract perspective generator. Everything is exact and computed
// from the stored bases; this is deliberately a desk-scale implementation.

#include <optional>
#include <vector>

#include "omact/ground.hpp"

namespace omact {

class Matroid {
public:
    Matroid(GroundSet ground, std::vector<Mask> bases);  // validates basis axioms

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    int rank() const { return rank_; }
    int rank(Mask a) const;  // max over bases of |a ∩ B|
    bool independent(Mask a) const { return rank(a) == set_size(a); }
    bool spanning(Mask a) const { return rank(a) == rank_; }

    const std::vector<Mask>& bases() const { return bases_; }
    const std::vector<Mask>& circuits() const { return circuits_; }
    const std::vector<Mask>& cocircuits() const { return cocircuits_; }

    Matroid dual() const;

    bool operator==(const Matroid& o) const;
    bool operator!=(const Matroid& o) const { return !(*this == o); }

private:
    GroundSet ground_;
    std::vector<Mask> bases_;  // sorted, distinct
    int rank_ = 0;
    std::vector<Mask> circuits_;    // sorted
    std::vector<Mask> cocircuits_;  // sorted

    void validate_bases() const;
};

// A circuit of m and a cocircuit of n meeting in exactly one element.
struct PerspectiveViolation {
    Mask circuit = 0;
    Mask cocircuit = 0;
};

struct MatroidPerspectiveCheck {
    bool ok = false;
    std::optional<PerspectiveViolation> witness;  // set when !ok
};

// Decides whether (m, n) is a matroid perspective. Runs both
// characterizations — the rank-difference inequality over all Y ⊆ X and the
// circuit/cocircuit single-element meet — and fails loudly if they disagree.
MatroidPerspectiveCheck is_matroid_perspective(const Matroid& m, const Matroid& n);

// Validated ordered pair (m, n) of matroids on the same ground set with
// r_N(X)-r_N(Y) <= r_M(X)-r_M(Y) for all Y ⊆ X.
class MatroidPerspective {
public:
    MatroidPerspective(Matroid m, Matroid n);

    const Matroid& m() const { return m_; }
    const Matroid& n() const { return n_; }
    const GroundSet& ground() const { return m_.ground(); }
    int size() const { return m_.size(); }

private:
    Matroid m_;
    Matroid n_;
};

// (L delete f, L contract f), both restricted to ground(L) minus f.
MatroidPerspective minor_perspective(const Matroid& l, Mask f);

}  // namespace omact
