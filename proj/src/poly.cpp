#include "omact/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace omact {

namespace {

const char* kVarNames[kNumVars] = {"x", "y", "z", "u", "v"};

// Factor order inside a printed monomial.
const Var kPrintOrder[kNumVars] = {Var::x, Var::u, Var::y, Var::v, Var::z};

// Sort key order between monomials (after total degree).
const Var kSortOrder[kNumVars] = {Var::z, Var::x, Var::u, Var::y, Var::v};

int total_degree(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool presentation_before(const ExpVec& a, const ExpVec& b) {
    const int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta > tb;
    for (Var v : kSortOrder) {
        const int i = static_cast<int>(v);
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    p.add_term(ExpVec{}, c);
    return p;
}

MultiPoly MultiPoly::variable(Var v) {
    ExpVec e{};
    e[static_cast<int>(v)] = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const ExpVec& e, const Rational& c) {
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

Rational MultiPoly::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

bool MultiPoly::integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

int MultiPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e;
            for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    MultiPoly out = constant(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

Rational MultiPoly::eval(const std::array<Rational, kNumVars>& point) const {
    Rational out;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] > 0) t *= point[i].pow(e[i]);
        out += t;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& repl) const {
    // Powers of each replacement, grown on demand.
    std::map<Var, std::vector<MultiPoly>> powers;
    for (const auto& [v, p] : repl) powers[v] = {constant(1), p};

    MultiPoly out;
    for (const auto& [e, c] : terms_) {
        ExpVec kept{};
        MultiPoly t;
        bool have_poly = false;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            const Var v = static_cast<Var>(i);
            auto it = powers.find(v);
            if (it == powers.end()) {
                kept[i] = e[i];
                continue;
            }
            auto& pw = it->second;
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * pw[1]);
            if (!have_poly) {
                t = pw[e[i]];
                have_poly = true;
            } else {
                t *= pw[e[i]];
            }
        }
        MultiPoly base = monomial(kept, c);
        out += have_poly ? base * t : base;
    }
    return out;
}

MultiPoly MultiPoly::derivative(Var v, int times) const {
    MultiPoly cur = *this;
    const int iv = static_cast<int>(v);
    for (int round = 0; round < times; ++round) {
        MultiPoly next;
        for (const auto& [e, c] : cur.terms_) {
            if (e[iv] == 0) continue;
            ExpVec d = e;
            --d[iv];
            next.add_term(d, c * Rational(e[iv]));
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::pair<ExpVec, Rational>> MultiPoly::sorted_terms() const {
    std::vector<std::pair<ExpVec, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return presentation_before(a.first, b.first); });
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        const bool negative = c < Rational(0);
        const Rational mag = negative ? -c : c;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string factors;
        for (Var v : kPrintOrder) {
            const int i = static_cast<int>(v);
            if (e[i] == 0) continue;
            if (!factors.empty()) factors += '*';
            factors += kVarNames[i];
            if (e[i] > 1) factors += "^" + std::to_string(e[i]);
        }
        if (factors.empty()) {
            os << mag.str();
        } else {
            if (mag != Rational(1)) os << mag.str() << '*';
            os << factors;
        }
    }
    return os.str();
}

std::string poly_diff_detail(const MultiPoly& a, const MultiPoly& b) {
    if (a == b) return "";
    MultiPoly d = a - b;
    const auto terms = d.sorted_terms();
    const auto& [e, c] = terms.front();
    std::ostringstream os;
    os << "first differing monomial x^" << e[0] << " y^" << e[1] << " z^" << e[2] << " u^" << e[3]
       << " v^" << e[4] << ": lhs-rhs coefficient " << c.str();
    return os.str();
}

}  // namespace omact
