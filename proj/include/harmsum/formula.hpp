#ifndef HARMSUM_FORMULA_HPP
#define HARMSUM_FORMULA_HPP

#include <cstdint>
#include <map>
#include <string>

#include "harmsum/hexpr.hpp"

namespace harmsum {

enum class Provenance { transcribed, derived_base, derived_raised };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& s);

/// A closed form for sum_{k=1..n} k^power * H_k^(order)(x):
/// the semantic contract is that rhs equals that sum for all admissible (x,n).
struct Formula {
    unsigned power = 0;
    unsigned order = 1;
    HExpr rhs;
    Provenance provenance = Provenance::transcribed;
    /// Set once the rhs has passed an oracle grid; registry insertion and
    /// order-raising require it.
    bool verified = false;

    /// Equality of the mathematical content (provenance and verification
    /// status are bookkeeping, not content).
    friend bool operator==(const Formula& a, const Formula& b) {
        return a.power == b.power && a.order == b.order && a.rhs == b.rhs;
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

    /// Identical stored coefficient representations, term for term.
    bool identical(const Formula& o) const;

    std::string lhs_plain() const;
};

enum class FormulaStyle { plain, latex, json };

/// Deterministic rendering; the json style round-trips through parse_formula.
std::string format_formula(const Formula& f, FormulaStyle style);

/// Inverse of format_formula(..., json). Bit-exact: formatting the parsed
/// formula reproduces the input text.
Formula parse_formula(const std::string& json_text);

/// A statement over the symbols H_{p+n}^(j) and H_p^(j) obtained by fixing
/// x = p (a nonnegative integer) in a Formula and rewriting through
/// H_n^(j)(p) = H_{p+n}^(j) - H_p^(j). Coefficients are polynomials in (p, n);
/// the indeterminate x slot stores p. Contract:
///   sum_{k=1..n} k^power H_{p+k}^(order) =
///     sum_j upper_j(p,n) H_{p+n}^(j) + sum_j lower_j(p,n) H_p^(j) + free(p,n).
struct ShiftedFormula {
    unsigned power = 0;
    unsigned order = 1;
    std::map<unsigned, MultiPoly> upper;  // coefficients of H_{p+n}^(j), j >= 1
    std::map<unsigned, MultiPoly> lower;  // coefficients of H_p^(j), j >= 1
    MultiPoly free;

    void add_upper(unsigned j, const MultiPoly& c);
    void add_lower(unsigned j, const MultiPoly& c);
    /// Adds c * (H_{p+n}^(j) - H_p^(j)); j = 0 folds to c * n in free.
    void add_delta(unsigned j, const MultiPoly& c);

    Rational eval(std::uint64_t p, std::uint64_t n) const;

    friend bool operator==(const ShiftedFormula& a, const ShiftedFormula& b) {
        return a.power == b.power && a.order == b.order && a.upper == b.upper && a.lower == b.lower &&
               a.free == b.free;
    }

    std::string lhs_plain() const;
    std::string to_plain() const;
    std::string to_latex() const;
};

} // namespace harmsum

#endif
