#ifndef HARMSUM_DERIVE_HPP
#define HARMSUM_DERIVE_HPP

#include "harmsum/registry.hpp"
#include "harmsum/verify.hpp"

namespace harmsum {

/// The right side of the weighted telescoping identity specialized to
/// y = x + i, as an H-basis expression in {H_n(x), 1}:
///   ((x+i+1)/(i+1)) * prod_{j=1..i+1} (x+n+j)/(x+j) * (H_n(x) - 1/(i+1))
///     + (x+i+1)/(i+1)^2.
HExpr identity2_rhs_expr(unsigned i);

/// One order-raising step: applies D_x to a verified formula and divides by
/// -order (D_x of the left side sends H^(m) to -m * H^(m+1)).
Formula raise_order(const Formula& f);

/// Moment extraction at order 1: expands the binomial-ratio sum for y = x+i
/// through the rising-product coefficients, substitutes the registry's base
/// formulas for the lower moments, and solves for the k^i moment. Requires
/// (t, 1) in the registry for every t < i; throws listing missing keys.
Formula derive_base_formula(unsigned i, const FormulaRegistry& reg);

/// Full derivation pipeline: returns the registry entry when present,
/// otherwise derives prerequisites, extracts the base formula, raises it to
/// the requested order, verifying and inserting every step. Throws cap_error
/// beyond reg.extension_cap() and verification_error (with the witness
/// point) if an oracle check fails.
Formula derive_formula(unsigned i, unsigned m, FormulaRegistry& reg);
Formula derive_formula(unsigned i, unsigned m, FormulaRegistry& reg, const Grid& grid);

/// Rewrites a verified formula at x = p through
/// H_n^(j)(p) = H_{p+n}^(j) - H_p^(j), adding sum_{k<=n} k^power * H_p^(order)
/// for the shifted left side. Coefficients stay symbolic in (p, n); the
/// formula's coefficients must be polynomial.
ShiftedFormula specialize_shift(const Formula& f);

/// The same statement with p fixed to a concrete nonnegative integer
/// (coefficients become polynomials in n alone).
ShiftedFormula specialize_shift(const Formula& f, std::uint64_t p);

/// Closed-form power sum: S_i(n) = sum_{k=1..n} k^i as a polynomial in n.
MultiPoly power_sum_poly(unsigned i);

} // namespace harmsum

#endif
