#ifndef HARMSUM_RATIONAL_HPP
#define HARMSUM_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "harmsum/error.hpp"

namespace harmsum {

/// Arbitrary-precision integer, value semantics over GMP's mpz_t.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(int v) : Int(static_cast<long>(v)) {}               // NOLINT: implicit by design
    Int(long v) { mpz_init_set_si(z_, v); }                 // NOLINT
    Int(unsigned long v) { mpz_init_set_ui(z_, v); }        // NOLINT
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw parse_error("not an integer literal: '" + s + "'");
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    int sign() const { return mpz_sgn(z_); }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    Int operator-() const { Int r; mpz_neg(r.z_, z_); return r; }
    Int& operator+=(const Int& o) { mpz_add(z_, z_, o.z_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(z_, z_, o.z_); return *this; }

    /// Truncated quotient; exact division available through divexact.
    friend Int operator/(const Int& a, const Int& b) {
        if (b.is_zero()) throw division_by_zero();
        Int r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (b.is_zero()) throw division_by_zero();
        Int r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    static Int divexact(const Int& a, const Int& b) {
        if (b.is_zero()) throw division_by_zero();
        Int r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    static Int gcd(const Int& a, const Int& b) { Int r; mpz_gcd(r.z_, a.z_, b.z_); return r; }
    static Int pow(const Int& a, unsigned long e) { Int r; mpz_pow_ui(r.z_, a.z_, e); return r; }
    Int abs() const { Int r; mpz_abs(r.z_, z_); return r; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }

    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

private:
    mpz_t z_;
};

/// Exact rational scalar. Invariants: denominator > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1. Every constructor and operation canonicalizes.
class Rational {
public:
    Rational() { mpq_init(q_); }
    Rational(int v) : Rational(static_cast<long>(v)) {}     // NOLINT: implicit by design
    Rational(long v) {                                      // NOLINT
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den) {
        if (den == 0) throw division_by_zero();
        mpq_init(q_);
        mpq_set_si(q_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(q_, q_, d);
        mpq_clear(d);
    }
    Rational(const Int& num, const Int& den) {
        if (den.is_zero()) throw division_by_zero();
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rational(const Int& v) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), v.raw());
    }
    explicit Rational(std::uint64_t v) {
        mpq_init(q_);
        mpz_set_ui(mpq_numref(q_), static_cast<unsigned long>(v));
    }
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    /// Parses an exact rational literal "p" or "p/q". Rejects anything else,
    /// in particular decimal notation.
    static Rational parse(const std::string& text);

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    Int num() const {
        Int r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    Int den() const {
        Int r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw division_by_zero();
        Rational r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rational operator-() const {
        Rational r;
        mpq_neg(r.q_, q_);
        return r;
    }
    Rational& operator+=(const Rational& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        Rational r;
        mpq_inv(r.q_, q_);
        return r;
    }
    /// Nonnegative integer power.
    static Rational pow(const Rational& base, unsigned long e) {
        Rational r(1);
        if (e == 0) return r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), e);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), e);
        return r;  // powers of a reduced fraction stay reduced
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }
    static int cmp(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_); }

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    /// Decimal approximation with the given number of significant digits,
    /// derived from the exact value by integer division (no floating point).
    std::string to_decimal_string(unsigned significant_digits = 12) const;

    /// Approximate double value; for reporting ratios only, never for math.
    double to_double() const { return mpq_get_d(q_); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

private:
    mpq_t q_;
};

} // namespace harmsum

#endif
