#include "harmsum/derive.hpp"

#include <mutex>

namespace harmsum {

namespace {

const MultiPoly& PX() {
    static const MultiPoly v = MultiPoly::variable(Var::x);
    return v;
}
const MultiPoly& PN() {
    static const MultiPoly v = MultiPoly::variable(Var::n);
    return v;
}

} // namespace

HExpr identity2_rhs_expr(unsigned i) {
    const MultiPoly &X = PX(), &N = PN();
    MultiPoly ratio_num(1), ratio_den(1);
    for (unsigned j = 1; j <= i + 1; ++j) {
        ratio_num *= X + N + MultiPoly(static_cast<long>(j));
        ratio_den *= X + MultiPoly(static_cast<long>(j));
    }
    const Rational d(static_cast<long>(i) + 1);              // y - x + 1
    const MultiPoly y1 = X + MultiPoly(static_cast<long>(i) + 1);  // y + 1

    // (y+1)/(y-x+1) * C(y+n+1,n)/C(x+n,n)
    const RationalFn r1 = RationalFn(y1 * ratio_num, ratio_den) * RationalFn(d.inverse());
    const RationalFn free = -(r1 * RationalFn(d.inverse())) + RationalFn(y1) * RationalFn((d * d).inverse());

    HExpr e;
    e.add_term(1, r1);
    e.add_free(free);
    return e;
}

Formula raise_order(const Formula& f) {
    if (f.order < 1) throw domain_error("cannot raise a formula of order 0");
    if (!f.verified)
        throw error("registry discipline: order-raising requires a verified formula (power " +
                    std::to_string(f.power) + ", order " + std::to_string(f.order) + ")");
    Formula g;
    g.power = f.power;
    g.order = f.order + 1;
    g.rhs = f.rhs.dx().scaled(RationalFn(Rational(-1, static_cast<long>(f.order))));
    g.provenance = Provenance::derived_raised;
    if (g.rhs.max_order() != g.order)
        throw error("order raising produced a malformed expression: top order " +
                    std::to_string(g.rhs.max_order()) + ", expected " + std::to_string(g.order));
    return g;
}

Formula derive_base_formula(unsigned i, const FormulaRegistry& reg) {
    std::string missing;
    for (unsigned t = 0; t < i; ++t) {
        if (!reg.contains(t, 1)) missing += (missing.empty() ? "" : ", ") + ("(" + std::to_string(t) + ", 1)");
    }
    if (!missing.empty()) throw error("derivation prerequisites missing from registry: " + missing);

    const MultiPoly& X = PX();
    const std::vector<MultiPoly> coeffs = expand_rising_product(i);  // c_0..c_i in x, c_i = 1
    MultiPoly denom_prod(1);
    for (unsigned j = 1; j <= i; ++j) denom_prod *= X + MultiPoly(static_cast<long>(j));

    // sum_t c_t(x) * M_t = denom_prod * rhs2, with M_t = sum k^t H_k(x);
    // solve for the top moment (c_i = 1).
    HExpr target = identity2_rhs_expr(i).scaled(RationalFn(denom_prod));
    for (unsigned t = 0; t < i; ++t) {
        const Formula lower = *reg.find(t, 1);
        target -= lower.rhs.scaled(RationalFn(coeffs[t]));
    }

    Formula f;
    f.power = i;
    f.order = 1;
    f.rhs = std::move(target);
    f.provenance = Provenance::derived_base;
    return f;
}

namespace {

void verify_and_insert(Formula& f, FormulaRegistry& reg, const Grid& grid) {
    const VerifyReport report = verify_formula(f, grid);
    if (!report.ok()) {
        const VerifyPoint& w = *report.first_failure;
        throw verification_error("derived formula for power " + std::to_string(f.power) + ", order " +
                                     std::to_string(f.order) + " failed its oracle check at x = " +
                                     w.x.to_string() + ", n = " + std::to_string(w.n) + " (oracle " +
                                     w.expected.to_string() + ", formula " + w.got.to_string() + ")",
                                 w.x.to_string(), w.n);
    }
    if (report.no_coverage)
        throw verification_error("verification grid provided no coverage for power " + std::to_string(f.power) +
                                     ", order " + std::to_string(f.order),
                                 "-", 0);
    f.verified = true;
    reg.insert(f);
}

} // namespace

Formula derive_formula(unsigned i, unsigned m, FormulaRegistry& reg, const Grid& grid) {
    if (m < 1) throw domain_error("harmonic order must be >= 1");
    if (i > reg.extension_cap())
        throw cap_error("power " + std::to_string(i) + " exceeds the derivation cap " +
                        std::to_string(reg.extension_cap()));
    if (auto existing = reg.find(i, m)) return *existing;

    for (unsigned t = 0; t < i; ++t)
        if (!reg.contains(t, 1)) derive_formula(t, 1, reg, grid);

    Formula f;
    if (auto base = reg.find(i, 1)) {
        f = *base;
    } else {
        f = derive_base_formula(i, reg);
        verify_and_insert(f, reg, grid);
    }
    for (unsigned order = 2; order <= m; ++order) {
        if (auto existing = reg.find(i, order)) {
            f = *existing;
            continue;
        }
        f = raise_order(f);
        verify_and_insert(f, reg, grid);
    }
    return f;
}

Formula derive_formula(unsigned i, unsigned m, FormulaRegistry& reg) {
    return derive_formula(i, m, reg, default_grid());
}

MultiPoly power_sum_poly(unsigned i) {
    static std::mutex mu;
    static std::vector<MultiPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(PN());  // S_0(n) = n
    while (cache.size() <= i) {
        // (n+1)^{t+1} - 1 = sum_{j=0..t} C(t+1, j) S_j(n)
        const unsigned t = static_cast<unsigned>(cache.size());
        MultiPoly acc = MultiPoly::pow(PN() + MultiPoly(1), t + 1) - MultiPoly(1);
        Rational binom(1);  // C(t+1, j), built incrementally
        for (unsigned j = 0; j < t; ++j) {
            acc -= binom * cache[j];
            binom *= Rational(static_cast<long>(t + 1 - j), static_cast<long>(j + 1));
        }
        cache.push_back(acc / Rational(static_cast<long>(t) + 1));
    }
    return cache[i];
}

ShiftedFormula specialize_shift(const Formula& f) {
    if (!f.verified) throw error("registry discipline: shift specialization requires a verified formula");
    ShiftedFormula s;
    s.power = f.power;
    s.order = f.order;
    for (const auto& [l, c] : f.rhs.harmonic_terms()) {
        if (!c.is_polynomial())
            throw domain_error("shift specialization needs polynomial coefficients; got " + c.to_string());
        s.add_delta(l, c.num());
    }
    if (!f.rhs.free_term().is_polynomial())
        throw domain_error("shift specialization needs a polynomial free term; got " + f.rhs.free_term().to_string());
    s.free += f.rhs.free_term().num();
    // The shifted left side adds H_p^(order) * sum_{k=1..n} k^power.
    s.add_lower(f.order, power_sum_poly(f.power));
    return s;
}

ShiftedFormula specialize_shift(const Formula& f, std::uint64_t p) {
    const ShiftedFormula sym = specialize_shift(f);
    const Rational pv(static_cast<long>(p));
    ShiftedFormula s;
    s.power = sym.power;
    s.order = sym.order;
    for (const auto& [j, c] : sym.upper) s.add_upper(j, c.subst(Var::x, pv));
    for (const auto& [j, c] : sym.lower) s.add_lower(j, c.subst(Var::x, pv));
    s.free = sym.free.subst(Var::x, pv);
    return s;
}

} // namespace harmsum
