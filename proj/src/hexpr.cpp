#include "harmsum/hexpr.hpp"

#include "harmsum/harmonic.hpp"

namespace harmsum {

void HExpr::add_term(unsigned order, RationalFn coeff) {
    if (coeff.is_zero()) return;
    if (order == 0) {
        free_ += coeff * RationalFn(MultiPoly::variable(Var::n));
        return;
    }
    auto it = terms_.find(order);
    if (it == terms_.end()) {
        terms_.emplace(order, std::move(coeff));
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HExpr operator+(const HExpr& a, const HExpr& b) {
    HExpr r = a;
    for (const auto& [l, c] : b.terms_) {
        auto [it, inserted] = r.terms_.emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    r.free_ += b.free_;
    return r;
}

HExpr operator-(const HExpr& a, const HExpr& b) { return a + (-b); }

HExpr HExpr::operator-() const {
    HExpr r;
    for (const auto& [l, c] : terms_) r.terms_.emplace(l, -c);
    r.free_ = -free_;
    return r;
}

HExpr HExpr::scaled(const RationalFn& c) const {
    HExpr r;
    if (c.is_zero()) return r;
    for (const auto& [l, coeff] : terms_) {
        RationalFn p = coeff * c;
        if (!p.is_zero()) r.terms_.emplace(l, std::move(p));
    }
    r.free_ = free_ * c;
    return r;
}

HExpr HExpr::dx() const {
    HExpr r;
    for (const auto& [l, c] : terms_) {
        const RationalFn dc = c.dx();
        if (!dc.is_zero()) r.add_term(l, dc);
        r.add_term(l + 1, c * RationalFn(Rational(-static_cast<long>(l))));
    }
    r.free_ = free_.dx();
    return r;
}

bool operator==(const HExpr& a, const HExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ita = a.terms_.begin(), itb = b.terms_.begin(); ita != a.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (!(ita->second == itb->second)) return false;
    }
    return a.free_ == b.free_;
}

bool HExpr::defined_at(const Rational& x, std::uint64_t n) const {
    const Assignment a = Assignment::xn(x, Rational(n));
    if (!free_.defined_at(a)) return false;
    for (const auto& [l, c] : terms_)
        if (!c.defined_at(a)) return false;
    return true;
}

Rational HExpr::eval(const Rational& x, std::uint64_t n) const {
    const Assignment a = Assignment::xn(x, Rational(n));
    Rational sum(0);
    for (const auto& [l, c] : terms_) {
        if (!c.defined_at(a))
            throw domain_error("coefficient of H^(" + std::to_string(l) + ") undefined at x = " + x.to_string() +
                               ", n = " + std::to_string(n) + ": denominator (" + c.den().to_string() + ") vanishes");
        sum += c.eval(a) * harmonic_general(n, l, x);
    }
    if (!free_.defined_at(a))
        throw domain_error("free term undefined at x = " + x.to_string() + ", n = " + std::to_string(n) +
                           ": denominator (" + free_.den().to_string() + ") vanishes");
    sum += free_.eval(a);
    return sum;
}

} // namespace harmsum
