#ifndef HARMSUM_RATIONAL_FN_HPP
#define HARMSUM_RATIONAL_FN_HPP

#include <string>

#include "harmsum/multipoly.hpp"

namespace harmsum {

/// Quotient of two MultiPolys. Invariants: den != 0, den's leading coefficient
/// is 1, and whenever one side exactly divides the other the quotient is
/// collapsed (so every polynomial value is stored with den = 1). Semantic
/// equality is decided by cross-multiplication, which needs no gcd.
class RationalFn {
public:
    RationalFn() : num_(0), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}            // NOLINT: implicit by design
    RationalFn(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RationalFn(MultiPoly p) : num_(std::move(p)), den_(1) {} // NOLINT
    RationalFn(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    RationalFn& operator+=(const RationalFn& o) { *this = *this + o; return *this; }
    RationalFn& operator-=(const RationalFn& o) { *this = *this - o; return *this; }
    RationalFn& operator*=(const RationalFn& o) { *this = *this * o; return *this; }

    /// Semantic equality: a/b == c/d  iff  a*d == c*b.
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    /// Identical stored representation (used by round-trip checks).
    bool identical(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Formal d/dx by the quotient rule; n and k are constants under it.
    RationalFn dx() const;

    bool defined_at(const Assignment& a) const { return !den_.eval(a).is_zero(); }
    Rational eval(const Assignment& a) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

} // namespace harmsum

#endif
