#include "harmsum/rational_fn.hpp"

namespace harmsum {

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (auto q = MultiPoly::try_divide_exact(num_, den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly(1);
        return;
    }
    if (auto q = MultiPoly::try_divide_exact(den_, num_)) {
        // num/den = 1/(den/num); keeps e.g. (x+1)/((x+1)*(x+2)) in lowest terms.
        num_ = MultiPoly(1);
        den_ = std::move(*q);
    }
    const Rational lc = den_.leading_coeff();
    if (lc != Rational(1)) {
        const Rational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    if (a.den_ == b.den_) return RationalFn(a.num_ - b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw division_by_zero("rational function division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::dx() const {
    const MultiPoly dn = num_.partial_derivative(Var::x);
    if (is_polynomial()) return RationalFn(dn);
    const MultiPoly dd = den_.partial_derivative(Var::x);
    return RationalFn(dn * den_ - num_ * dd, den_ * den_);
}

Rational RationalFn::eval(const Assignment& a) const {
    const Rational d = den_.eval(a);
    if (d.is_zero())
        throw domain_error("coefficient denominator vanishes: (" + den_.to_string() + ") = 0");
    return num_.eval(a) / d;
}

std::string RationalFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::string RationalFn::to_latex() const {
    if (is_polynomial()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

} // namespace harmsum
