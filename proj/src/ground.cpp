#include "omact/ground.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace omact {

struct GroundSet::Data {
    std::vector<std::string> labels;
    std::map<std::string, int> index;
};

namespace {

const std::shared_ptr<const GroundSet::Data>& empty_data() {
    static const auto data = std::make_shared<const GroundSet::Data>();
    return data;
}

}  // namespace

GroundSet::GroundSet() : data_(empty_data()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
    if (labels.size() > 30)
        throw ValidationError("ground set too large: " + std::to_string(labels.size()) +
                              " elements (limit 30)");
    auto data = std::make_shared<Data>();
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (labels[i].empty()) throw ValidationError("empty element label");
        if (!data->index.emplace(labels[i], i).second)
            throw ValidationError("duplicate element label '" + labels[i] + "'");
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
}

int GroundSet::size() const { return static_cast<int>(data_->labels.size()); }

Mask GroundSet::full_mask() const {
    const int n = size();
    return n == 0 ? 0 : (Mask{1} << n) - 1;
}

const std::vector<std::string>& GroundSet::labels() const { return data_->labels; }

const std::string& GroundSet::label(int e) const { return data_->labels.at(e); }

int GroundSet::index(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end())
        throw ValidationError("unknown element label '" + label + "'");
    return it->second;
}

bool GroundSet::has_label(const std::string& label) const {
    return data_->index.count(label) != 0;
}

bool GroundSet::operator==(const GroundSet& other) const {
    return data_ == other.data_ || data_->labels == other.data_->labels;
}

std::vector<std::string> labels_of(const GroundSet& g, Mask m) {
    std::vector<std::string> out;
    for (int e = 0; e < g.size(); ++e)
        if (contains(m, e)) out.push_back(g.label(e));
    return out;
}

Mask mask_of(const GroundSet& g, const std::vector<std::string>& labels) {
    Mask m = 0;
    for (const auto& l : labels) m |= single(g.index(l));
    return m;
}

std::string format_set(const GroundSet& g, Mask m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e = 0; e < g.size(); ++e) {
        if (!contains(m, e)) continue;
        if (!first) os << ',';
        os << g.label(e);
        first = false;
    }
    os << '}';
    return os.str();
}

void require_same_ground(const GroundSet& a, const GroundSet& b) {
    if (a == b) return;
    std::ostringstream os;
    os << "ground sets differ: [";
    for (size_t i = 0; i < a.labels().size(); ++i) os << (i ? "," : "") << a.labels()[i];
    os << "] vs [";
    for (size_t i = 0; i < b.labels().size(); ++i) os << (i ? "," : "") << b.labels()[i];
    os << ']';
    throw AmbientMismatchError(os.str());
}

SignedSubset::SignedSubset(GroundSet ground, Mask pos, Mask neg)
    : ground_(std::move(ground)), pos_(pos), neg_(neg) {
    if (pos_ & neg_)
        throw ValidationError("signed subset has an element with both signs: " +
                              format_set(ground_, pos_ & neg_));
    if ((pos_ | neg_) & ~ground_.full_mask())
        throw ValidationError("signed subset leaves the ground set");
}

SignedSubset SignedSubset::negated() const { return SignedSubset(ground_, neg_, pos_); }

SignedSubset SignedSubset::reoriented(Mask a) const {
    return SignedSubset(ground_, (pos_ & ~a) | (neg_ & a), (neg_ & ~a) | (pos_ & a));
}

bool SignedSubset::operator==(const SignedSubset& other) const {
    return ground_ == other.ground_ && pos_ == other.pos_ && neg_ == other.neg_;
}

bool signed_less(const SignedSubset& a, const SignedSubset& b) {
    if (a.support() != b.support()) return a.support() < b.support();
    return a.pos() < b.pos();
}

std::string format_signed(const SignedSubset& x) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e = 0; e < x.ground().size(); ++e) {
        if (!contains(x.support(), e)) continue;
        if (!first) os << ',';
        os << x.ground().label(e) << (contains(x.pos(), e) ? '+' : '-');
        first = false;
    }
    os << '}';
    return os.str();
}

SignedSubset compose(const SignedSubset& x, const SignedSubset& y) {
    require_same_ground(x.ground(), y.ground());
    const Mask rest = ~x.support();
    return SignedSubset(x.ground(), x.pos() | (y.pos() & rest), x.neg() | (y.neg() & rest));
}

bool is_conformal(const SignedSubset& x, const SignedSubset& y) {
    require_same_ground(x.ground(), y.ground());
    return ((x.pos() & y.neg()) | (x.neg() & y.pos())) == 0;
}

bool is_orthogonal(const SignedSubset& x, const SignedSubset& y) {
    require_same_ground(x.ground(), y.ground());
    if ((x.support() & y.support()) == 0) return true;
    const Mask agree = (x.pos() & y.pos()) | (x.neg() & y.neg());
    const Mask disagree = (x.pos() & y.neg()) | (x.neg() & y.pos());
    return agree != 0 && disagree != 0;
}

}  // namespace omact
