#ifndef HARMSUM_MULTIPOLY_HPP
#define HARMSUM_MULTIPOLY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harmsum/rational.hpp"

namespace harmsum {

/// The three indeterminates, in canonical variable order x < n < k.
enum class Var : unsigned { x = 0, n = 1, k = 2 };

inline const char* var_name(Var v) {
    static constexpr const char* names[3] = {"x", "n", "k"};
    return names[static_cast<unsigned>(v)];
}

/// Exponent vector over (x, n, k).
struct Monomial {
    std::array<unsigned, 3> e{0, 0, 0};

    unsigned total_degree() const { return e[0] + e[1] + e[2]; }
    bool is_unit() const { return total_degree() == 0; }
    bool divides(const Monomial& m) const {
        return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
    }
    Monomial operator*(const Monomial& m) const {
        return Monomial{{e[0] + m.e[0], e[1] + m.e[1], e[2] + m.e[2]}};
    }
    /// Exponent-wise quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& m) const {
        return Monomial{{e[0] - m.e[0], e[1] - m.e[1], e[2] - m.e[2]}};
    }
    bool operator==(const Monomial& m) const { return e == m.e; }
};

/// Graded lexicographic order with x < n < k, arranged so that map iteration
/// starts at the leading monomial. Equal polynomials therefore have identical
/// stored representations.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        if (a.e[2] != b.e[2]) return a.e[2] > b.e[2];
        if (a.e[1] != b.e[1]) return a.e[1] > b.e[1];
        return a.e[0] > b.e[0];
    }
};

/// Full or partial assignment of values to the indeterminates.
struct Assignment {
    std::array<std::optional<Rational>, 3> values;

    Assignment& set(Var v, Rational value) {
        values[static_cast<unsigned>(v)] = std::move(value);
        return *this;
    }
    static Assignment xn(const Rational& x, const Rational& n) {
        return Assignment{}.set(Var::x, x).set(Var::n, n);
    }
    static Assignment xnk(const Rational& x, const Rational& n, const Rational& k) {
        return xn(x, n).set(Var::k, k);
    }
};

/// Sparse multivariate polynomial over Rational in the indeterminates x, n, k.
/// No stored coefficient is zero; terms sit in the canonical monomial order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT: implicit by design
    MultiPoly(Rational c) {                        // NOLINT
        if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
    }

    static MultiPoly variable(Var v) {
        Monomial m;
        m.e[static_cast<unsigned>(v)] = 1;
        return from_term(Rational(1), m);
    }
    static MultiPoly from_term(Rational c, Monomial m) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
    Rational constant_value() const;
    bool is_one() const { return is_constant() && constant_value() == Rational(1); }

    std::size_t term_count() const { return terms_.size(); }
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.total_degree(); }
    unsigned degree(Var v) const;
    bool uses(Var v) const { return degree(v) > 0; }

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    const Rational* coeff(const Monomial& m) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
    friend MultiPoly operator*(const MultiPoly& a, const Rational& c);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) { return a * c; }
    MultiPoly operator/(const Rational& c) const {
        if (c.is_zero()) throw division_by_zero();
        return *this * c.inverse();
    }
    static MultiPoly pow(const MultiPoly& base, unsigned e);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Formal partial derivative with respect to one indeterminate.
    MultiPoly partial_derivative(Var v) const;

    /// Evaluates under a full assignment of every indeterminate that occurs;
    /// throws unbound_variable naming the first missing one.
    Rational eval(const Assignment& a) const;

    /// Substitutes one indeterminate by an exact value; the rest stay formal.
    MultiPoly subst(Var v, const Rational& value) const;

    /// Exact multivariate division: returns a/b when b divides a, nullopt otherwise.
    static std::optional<MultiPoly> try_divide_exact(const MultiPoly& a, const MultiPoly& b);

    /// Canonical sparse text form, e.g. "1*n + 1*x + 1" or "-1/2*x^2*n + 3".
    std::string to_string() const;
    static MultiPoly parse(const std::string& text);

    /// LaTeX rendering of the same canonical term order.
    std::string to_latex() const;

    const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }

private:
    void insert_add(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational, MonomialOrder> terms_;
};

/// Coefficients c_0..c_m (polynomials in x) of the rising product
///   prod_{j=1..m} (x + j + k) = sum_t c_t(x) * k^t.
/// After division by prod_{j=1..m}(x+j) these are the weights that expand a
/// binomial ratio into the power moments k^0..k^m.
std::vector<MultiPoly> expand_rising_product(unsigned m);

} // namespace harmsum

#endif
