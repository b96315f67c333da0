#pragma once

// Ordered ground sets, element subsets as bit masks, signed subsets, and the
// three primitive sign relations everything else is built on.

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "omact/errors.hpp"

namespace omact {

// Subset of a ground set: bit i = element with rank i in the ground order.
using Mask = std::uint32_t;

inline int set_size(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int e) { return (m >> e) & 1u; }
inline Mask single(int e) { return Mask{1} << e; }
inline int min_element(Mask m) { return std::countr_zero(m); }  // requires m != 0

// Default ceiling for operations that enumerate 2^E.
inline constexpr int kDefaultSizeGuard = 20;
// Tighter default for the identity-verification suite (it runs several sums).
inline constexpr int kVerifySizeGuard = 16;

// Linearly ordered set of distinct labels. Element identity is the rank
// 0..n-1 in this order; labels are kept for I/O only. Immutable and cheap to
// copy; the order is fixed for the lifetime of every derived object.
class GroundSet {
public:
    GroundSet();  // empty ground set
    explicit GroundSet(std::vector<std::string> labels);

    int size() const;
    Mask full_mask() const;
    const std::vector<std::string>& labels() const;
    const std::string& label(int e) const;
    int index(const std::string& label) const;  // throws ValidationError if unknown
    bool has_label(const std::string& label) const;

    bool operator==(const GroundSet& other) const;
    bool operator!=(const GroundSet& other) const { return !(*this == other); }

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

// Labels of the elements of `m`, in ground order.
std::vector<std::string> labels_of(const GroundSet& g, Mask m);
Mask mask_of(const GroundSet& g, const std::vector<std::string>& labels);
std::string format_set(const GroundSet& g, Mask m);  // "{a,b,c}"

void require_same_ground(const GroundSet& a, const GroundSet& b);

// Signed subset: disjoint positive and negative parts over a ground set.
class SignedSubset {
public:
    SignedSubset() = default;
    SignedSubset(GroundSet ground, Mask pos, Mask neg);  // validates

    const GroundSet& ground() const { return ground_; }
    Mask pos() const { return pos_; }
    Mask neg() const { return neg_; }
    Mask support() const { return pos_ | neg_; }
    bool empty() const { return support() == 0; }
    bool is_positive() const { return neg_ == 0 && pos_ != 0; }

    SignedSubset negated() const;
    // Flip the sign of every element of `a`.
    SignedSubset reoriented(Mask a) const;

    bool operator==(const SignedSubset& other) const;
    bool operator!=(const SignedSubset& other) const { return !(*this == other); }

private:
    GroundSet ground_;
    Mask pos_ = 0;
    Mask neg_ = 0;
};

// Canonical order: by (support, positive part). Used for deterministic
// circuit lists and serialization.
bool signed_less(const SignedSubset& a, const SignedSubset& b);

std::string format_signed(const SignedSubset& x);  // "{a+,b-}"

// Composition X∘Y: sign of X where defined, else sign of Y.
SignedSubset compose(const SignedSubset& x, const SignedSubset& y);

// True iff no element carries opposite signs in x and y.
bool is_conformal(const SignedSubset& x, const SignedSubset& y);

// True iff the supports are disjoint, or some common element agrees in sign
// and some common element disagrees.
bool is_orthogonal(const SignedSubset& x, const SignedSubset& y);

}  // namespace omact
