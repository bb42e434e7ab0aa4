#ifndef HARMSUM_HARMONIC_HPP
#define HARMSUM_HARMONIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "harmsum/rational.hpp"

namespace harmsum {

/// Arguments of H_n^(l)(x) = sum_{k=1..n} 1/(x+k)^l.
struct HarmonicQuery {
    std::uint64_t n = 0;
    unsigned l = 1;
    Rational x;
};

/// Throws pole_error if x + k = 0 for some k in 1..n (only possible when x is
/// an integer in [-n, -1]).
void check_no_pole(const Rational& x, std::uint64_t n);

/// Exact H_n^(l)(x). H_n^(0)(x) = n (every summand is 1), H_0^(l)(x) = 0.
Rational harmonic_general(const HarmonicQuery& q);
Rational harmonic_general(std::uint64_t n, unsigned l, const Rational& x);

/// Prefix values H_1^(l)(x) .. H_n^(l)(x) in one incremental pass.
std::vector<Rational> harmonic_prefix(std::uint64_t n, unsigned l, const Rational& x);

/// H_{p+n}^(l), the shifted generalized harmonic number at x = 0.
Rational harmonic_shifted(std::uint64_t n, unsigned l, std::uint64_t p);

/// The brute-force oracle sum_{k=1..n} k^i * H_k^(l)(x). A cross-call prefix
/// memo keyed by (l, x) keeps this at O(n) summand evaluations; the memo is
/// internally synchronized and observationally pure.
Rational naive_moment_sum(unsigned i, unsigned l, const Rational& x, std::uint64_t n);

/// Definitional O(n^2) double summation: every H_k is rebuilt from scratch.
/// Serial reference implementation; the benchmark baseline.
Rational naive_moment_sum_quadratic(unsigned i, unsigned l, const Rational& x, std::uint64_t n);

/// Same O(n^2) work, inner rebuilds distributed across OpenMP threads.
/// Exact arithmetic makes the reduction order-independent, so the result is
/// identical to the serial reference. Falls back to serial without OpenMP.
Rational naive_moment_sum_quadratic_parallel(unsigned i, unsigned l, const Rational& x, std::uint64_t n);

/// Oracle for the shifted family: sum_{k=1..n} k^i * H_{p+k}^(l).
Rational naive_moment_sum_shifted(unsigned i, unsigned l, std::uint64_t p, std::uint64_t n);

/// Both sides of the telescoping binomial sum
///   sum_{k=1..n} C(y+k,k)/C(x+k,k)
///     = C(y+n+1,n)/C(x+n,n) * (y+1)/(y-x+1) - (y+1)/(y-x+1).
/// Ratios are built as telescoping products of linear factors, never through
/// factorials, so any rational x, y off the poles work exactly.
std::pair<Rational, Rational> identity1_sides(const Rational& x, const Rational& y, std::uint64_t n);

/// Both sides of the differentiated form
///   sum_{k=1..n} C(y+k,k)/C(x+k,k) H_k(x)
///     = (y+1)/(y-x+1) * C(y+n+1,n)/C(x+n,n) * (H_n(x) - 1/(y-x+1))
///       + (y+1)/(y-x+1)^2.
std::pair<Rational, Rational> identity2_sides(const Rational& x, const Rational& y, std::uint64_t n);

} // namespace harmsum

#endif
