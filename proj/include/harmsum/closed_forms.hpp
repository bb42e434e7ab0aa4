#ifndef HARMSUM_CLOSED_FORMS_HPP
#define HARMSUM_CLOSED_FORMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "harmsum/formula.hpp"

namespace harmsum {

/// Key of a weighted sum: sum_{k=1..n} k^power * H_k^(order)(x).
/// The hand-coded layer covers power 0..4 for every order >= 1; higher powers
/// belong to the derivation engine.
struct MomentKey {
    unsigned power = 0;
    unsigned order = 1;
};

constexpr unsigned kMaxHandCodedPower = 4;

/// The transcribed x-generic closed form for the key. For power >= 1 and
/// order <= power these are the dedicated low-order statements; otherwise the
/// order-parametric family instantiated at l = order - power - 1.
/// Throws cap_error for power > 4 (use the derivation engine instead).
Formula transcribed_generic(MomentKey key);

/// The transcribed shifted closed form (x = p family) for the key, expressed
/// in H_{p+n}^(j) and H_p^(j). The top-order power-4 statement is implemented
/// in its oracle-forced reading; see shifted_i4_top_misprint for the variant.
ShiftedFormula transcribed_shifted(MomentKey key);

/// Negative control: the top-order power-4 shifted statement with its second
/// term attached to H_{p+n}^(l+5) instead of H_p^(l+5), a plausible
/// transcription slip that verification must catch. l = order - 5.
ShiftedFormula shifted_i4_top_misprint(unsigned order);

/// Evaluates the closed form exactly. Cost is O(n * order) scalar operations
/// (one harmonic prefix pass per order), independent of power.
Rational closed_moment_sum(MomentKey key, const Rational& x, std::uint64_t n);

/// Evaluates the shifted closed form exactly against H_{p+n}^(j), H_p^(j).
Rational closed_moment_sum_shifted(MomentKey key, std::uint64_t p, std::uint64_t n);

/// One catalog row per printed statement: fifteen x-generic and fifteen
/// shifted entries, in stable order.
struct CatalogEntry {
    std::string id;           // e.g. "generic/power=2,order=2" or "shifted/power=4,order=l+5"
    unsigned power = 0;
    unsigned base_order = 1;  // smallest order the entry covers
    bool order_parametric = false;
    bool shifted = false;
    std::string statement;        // human-readable rendering (base-order instance)
    std::string statement_latex;  // LaTeX rendering of the same instance
    std::string machine;          // formula json (generic) or plain machine text (shifted)
};

std::vector<CatalogEntry> formula_catalog();

} // namespace harmsum

#endif
