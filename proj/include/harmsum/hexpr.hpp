#ifndef HARMSUM_HEXPR_HPP
#define HARMSUM_HEXPR_HPP

#include <cstdint>
#include <map>

#include "harmsum/rational_fn.hpp"

namespace harmsum {

/// Formal linear combination  sum_l c_l(x,n) * H_n^(l)(x) + c_free(x,n).
/// Order-0 contributions are folded into the free term through H_n^(0)(x) = n,
/// so stored keys are always >= 1 and no stored coefficient is zero.
class HExpr {
public:
    HExpr() = default;

    static HExpr constant(RationalFn c) {
        HExpr e;
        e.free_ = std::move(c);
        return e;
    }
    static HExpr harmonic_term(unsigned order, RationalFn coeff = RationalFn(1)) {
        HExpr e;
        e.add_term(order, std::move(coeff));
        return e;
    }

    /// Adds coeff * H^(order); order 0 folds to coeff * n in the free term.
    void add_term(unsigned order, RationalFn coeff);
    void add_free(RationalFn coeff) { free_ += std::move(coeff); }

    const std::map<unsigned, RationalFn>& harmonic_terms() const { return terms_; }
    const RationalFn& free_term() const { return free_; }

    bool is_zero() const { return terms_.empty() && free_.is_zero(); }
    /// Largest harmonic order present (0 if none).
    unsigned max_order() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    friend HExpr operator+(const HExpr& a, const HExpr& b);
    friend HExpr operator-(const HExpr& a, const HExpr& b);
    HExpr operator-() const;
    HExpr& operator+=(const HExpr& o) { *this = *this + o; return *this; }
    HExpr& operator-=(const HExpr& o) { *this = *this - o; return *this; }

    /// Multiplies every coefficient (and the free term) by c.
    HExpr scaled(const RationalFn& c) const;

    /// Formal D_x: c*H^(l) -> (dc/dx)*H^(l) - l*c*H^(l+1); the free term maps
    /// to its x-partial (n is constant under D_x).
    HExpr dx() const;

    /// Semantic equality: same harmonic orders, cross-multiplied coefficient
    /// equality, equal free terms.
    friend bool operator==(const HExpr& a, const HExpr& b);
    friend bool operator!=(const HExpr& a, const HExpr& b) { return !(a == b); }

    /// True when every coefficient denominator is nonzero at (x, n).
    bool defined_at(const Rational& x, std::uint64_t n) const;

    /// Substitutes exact harmonic values H_n^(l)(x) and evaluates. Throws
    /// domain_error naming the coefficient whose denominator vanishes, or
    /// pole_error if H itself is undefined.
    Rational eval(const Rational& x, std::uint64_t n) const;

private:
    std::map<unsigned, RationalFn> terms_;
    RationalFn free_;
};

} // namespace harmsum

#endif
