#include "omact/matroid.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace omact {

namespace {

// Minimal dependent sets for an arbitrary rank oracle: C is a circuit iff
// rank(C) = |C|-1 and every one-element deletion is independent.
std::vector<Mask> minimal_dependent(int n, const std::function<int(Mask)>& rank_of,
                                    int max_card) {
    std::vector<Mask> out;
    if (n == 0) return out;
    const Mask full = (Mask{1} << n) - 1;
    for (Mask m = 1; m <= full; ++m) {
        const int k = set_size(m);
        if (k > max_card) continue;
        if (rank_of(m) != k - 1) continue;
        bool circuit = true;
        for (Mask rest = m; rest;) {
            const Mask bit = rest & (~rest + 1);
            rest ^= bit;
            if (rank_of(m ^ bit) != k - 1) {
                circuit = false;
                break;
            }
        }
        if (circuit) out.push_back(m);
    }
    return out;
}

Mask compress(Mask m, Mask keep) {
    Mask out = 0;
    int j = 0;
    for (Mask rest = keep; rest;) {
        const Mask bit = rest & (~rest + 1);
        rest ^= bit;
        if (m & bit) out |= single(j);
        ++j;
    }
    return out;
}

}  // namespace

Matroid::Matroid(GroundSet ground, std::vector<Mask> bases)
    : ground_(std::move(ground)), bases_(std::move(bases)) {
    std::sort(bases_.begin(), bases_.end());
    if (std::adjacent_find(bases_.begin(), bases_.end()) != bases_.end())
        throw ValidationError("duplicate basis in matroid input");
    validate_bases();
    rank_ = set_size(bases_.front());

    const int n = size();
    circuits_ = minimal_dependent(
        n, [this](Mask a) { return rank(a); }, rank_ + 1);
    // Dual rank: r*(A) = |A| + r(E \ A) - r(M).
    const Mask full = ground_.full_mask();
    cocircuits_ = minimal_dependent(
        n, [this, full](Mask a) { return set_size(a) + rank(full & ~a) - rank_; },
        n - rank_ + 1);
}

void Matroid::validate_bases() const {
    if (bases_.empty()) throw ValidationError("matroid needs at least one basis");
    const Mask full = ground_.full_mask();
    const int r = set_size(bases_.front());
    for (Mask b : bases_) {
        if (b & ~full) throw ValidationError("basis leaves the ground set");
        if (set_size(b) != r) throw ValidationError("bases of unequal size");
    }
    // Basis exchange, checked pairwise at desk scale.
    auto is_basis = [this](Mask b) {
        return std::binary_search(bases_.begin(), bases_.end(), b);
    };
    for (Mask b1 : bases_) {
        for (Mask b2 : bases_) {
            for (Mask rest = b1 & ~b2; rest;) {
                const Mask e = rest & (~rest + 1);
                rest ^= e;
                bool found = false;
                for (Mask cand = b2 & ~b1; cand;) {
                    const Mask f = cand & (~cand + 1);
                    cand ^= f;
                    if (is_basis((b1 ^ e) | f)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    std::ostringstream os;
                    os << "basis exchange fails for " << format_set(ground_, b1) << " and "
                       << format_set(ground_, b2);
                    throw ValidationError(os.str());
                }
            }
        }
    }
}

int Matroid::rank(Mask a) const {
    if (a & ~ground_.full_mask())
        throw AmbientMismatchError("rank query leaves the ground set");
    int best = 0;
    for (Mask b : bases_) best = std::max(best, set_size(a & b));
    return best;
}

Matroid Matroid::dual() const {
    const Mask full = ground_.full_mask();
    std::vector<Mask> dual_bases;
    dual_bases.reserve(bases_.size());
    for (Mask b : bases_) dual_bases.push_back(full & ~b);
    return Matroid(ground_, std::move(dual_bases));
}

bool Matroid::operator==(const Matroid& o) const {
    return ground_ == o.ground_ && bases_ == o.bases_;
}

MatroidPerspectiveCheck is_matroid_perspective(const Matroid& m, const Matroid& n) {
    require_same_ground(m.ground(), n.ground());
    const int nelem = m.size();
    const Mask full = m.ground().full_mask();

    // Route 1: rank-difference inequality over all pairs Y ⊆ X.
    std::vector<int> rm(std::size_t{1} << nelem), rn(std::size_t{1} << nelem);
    for (Mask a = 0;; ++a) {
        rm[a] = m.rank(a);
        rn[a] = n.rank(a);
        if (a == full) break;
    }
    bool ok_rank = true;
    for (Mask x = 0; ok_rank; ++x) {
        for (Mask y = x;;) {
            if (rn[x] - rn[y] > rm[x] - rm[y]) {
                ok_rank = false;
                break;
            }
            if (y == 0) break;
            y = (y - 1) & x;
        }
        if (x == full) break;
    }

    // Route 2: no circuit of m meets a cocircuit of n in exactly one element.
    MatroidPerspectiveCheck result;
    result.ok = true;
    for (Mask c : m.circuits()) {
        for (Mask d : n.cocircuits()) {
            if (set_size(c & d) == 1) {
                result.ok = false;
                result.witness = PerspectiveViolation{c, d};
                break;
            }
        }
        if (!result.ok) break;
    }

    if (ok_rank != result.ok)
        throw InternalCheckError(
            "matroid perspective characterizations disagree (rank route says " +
            std::string(ok_rank ? "yes" : "no") + ", circuit route says " +
            std::string(result.ok ? "yes" : "no") + ")");
    return result;
}

MatroidPerspective::MatroidPerspective(Matroid m, Matroid n)
    : m_(std::move(m)), n_(std::move(n)) {
    auto check = is_matroid_perspective(m_, n_);
    if (!check.ok) {
        std::ostringstream os;
        os << "not a matroid perspective: circuit " << format_set(m_.ground(), check.witness->circuit)
           << " meets cocircuit " << format_set(n_.ground(), check.witness->cocircuit)
           << " in exactly one element";
        throw ValidationError(os.str());
    }
}

MatroidPerspective minor_perspective(const Matroid& l, Mask f) {
    const Mask full = l.ground().full_mask();
    if (f & ~full) throw ValidationError("minor set leaves the ground set");
    const Mask keep = full & ~f;

    GroundSet sub(labels_of(l.ground(), keep));

    std::vector<Mask> del_bases, con_bases;
    const int r_del = l.rank(keep);
    const int r_f = l.rank(f);
    const int r_con = l.rank() - r_f;
    // Enumerate subsets of the kept elements once for both minors.
    Mask a = keep;
    while (true) {
        const int k = set_size(a);
        if (k == r_del && l.rank(a) == r_del) del_bases.push_back(compress(a, keep));
        if (k == r_con && l.rank(a | f) == r_f + k) con_bases.push_back(compress(a, keep));
        if (a == 0) break;
        a = (a - 1) & keep;
    }
    return MatroidPerspective(Matroid(sub, std::move(del_bases)),
                              Matroid(sub, std::move(con_bases)));
}

}  // namespace omact
