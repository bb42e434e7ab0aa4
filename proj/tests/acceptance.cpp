// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance is exact equality; timing gates are wall-clock seconds.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "harmsum/bench.hpp"
#include "harmsum/closed_forms.hpp"
#include "harmsum/derive.hpp"
#include "harmsum/harmonic.hpp"
#include "harmsum/verify.hpp"

using namespace harmsum;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& title, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << title;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Every x-generic statement (order-parametric families at l in {0,1,2})
//    passes exact oracle equivalence on the default grid, under 30 s.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const Grid grid = default_grid();
    std::size_t statements = 0, points = 0;
    bool pass = true;
    std::string witness;
    auto run = [&](MomentKey key) {
        const auto rep = verify_formula(transcribed_generic(key), grid);
        points += rep.total;
        if (!rep.ok()) {
            pass = false;
            if (witness.empty() && rep.first_failure)
                witness = "power " + std::to_string(key.power) + " order " + std::to_string(key.order) + " at x = " +
                          rep.first_failure->x.to_string() + ", n = " + std::to_string(rep.first_failure->n);
        }
    };
    for (unsigned power = 0; power <= 4; ++power) {
        for (unsigned order = 1; order <= power; ++order) {
            run({power, order});
            ++statements;
        }
        for (unsigned l = 0; l <= 2; ++l) run({power, power + 1 + l});
        ++statements;
    }
    const double secs = seconds_since(t0);
    pass = pass && statements == 15 && secs < 30.0;
    std::ostringstream detail;
    detail << statements << " statements, " << points << " grid points, exact, " << secs << " s";
    if (!witness.empty()) detail << ", first failure: " << witness;
    report(1, pass, "x-generic statement suite on the default grid", detail.str());
}

// 2. Every shifted statement passes for p in 0..6, n in 0..25 (exact), and
//    the misprinted reading of the top shifted statement is caught with a
//    reported counterexample.
void criterion2() {
    std::vector<std::uint64_t> ps{0, 1, 2, 3, 4, 5, 6}, ns;
    for (std::uint64_t n = 0; n <= 25; ++n) ns.push_back(n);
    std::size_t statements = 0, points = 0;
    bool pass = true;
    std::string witness;
    auto run = [&](MomentKey key) {
        const auto rep = verify_shifted(transcribed_shifted(key), ps, ns);
        points += rep.total;
        if (!rep.ok()) {
            pass = false;
            if (witness.empty() && rep.first_failure)
                witness = "power " + std::to_string(key.power) + " order " + std::to_string(key.order) + " at p = " +
                          rep.first_failure->x.to_string() + ", n = " + std::to_string(rep.first_failure->n);
        }
    };
    for (unsigned power = 0; power <= 4; ++power) {
        for (unsigned order = 1; order <= power; ++order) {
            run({power, order});
            ++statements;
        }
        for (unsigned l = 0; l <= 2; ++l) run({power, power + 1 + l});
        ++statements;
    }
    // the literal printed reading must produce a counterexample
    const auto probe = verify_shifted(shifted_i4_top_misprint(5), ps, ns);
    const bool probe_caught = !probe.ok() && probe.first_failure.has_value();
    pass = pass && statements == 15 && probe_caught;
    std::ostringstream detail;
    detail << statements << " statements, " << points << " points, exact";
    if (probe_caught)
        detail << "; misprinted variant caught at p = " << probe.first_failure->x.to_string()
               << ", n = " << probe.first_failure->n << " (oracle " << probe.first_failure->expected.to_string()
               << ", misprint " << probe.first_failure->got.to_string() << ")";
    else
        detail << "; misprinted variant NOT caught";
    if (!witness.empty()) detail << ", first failure: " << witness;
    report(2, pass, "shifted statement suite with the misprint control", detail.str());
}

// 3. Both telescoping identities hold on >= 200 randomized samples, n <= 30.
void criterion3() {
    const auto rep1 = sample_identity(1, 200, 30, 2026);
    const auto rep2 = sample_identity(2, 200, 30, 8162);
    const bool pass = rep1.ok() && rep2.ok() && rep1.samples >= 200 && rep2.samples >= 200;
    std::ostringstream detail;
    detail << rep1.passed << "/" << rep1.samples << " and " << rep2.passed << "/" << rep2.samples
           << " samples exact";
    if (!rep1.first_witness.empty()) detail << "; identity-1 witness: " << rep1.first_witness;
    if (!rep2.first_witness.empty()) detail << "; identity-2 witness: " << rep2.first_witness;
    report(3, pass, "randomized identity suite", detail.str());
}

// 4. The derivation engine reproduces every transcribed statement
//    coefficient-for-coefficient (>= 30 coefficient equalities).
void criterion4() {
    FormulaRegistry reg;
    std::size_t formulas = 0, coefficients = 0;
    bool pass = true;
    std::string failure;
    for (unsigned i = 0; i <= 4 && pass; ++i) {
        for (unsigned m = 1; m <= i + 2 && pass; ++m) {
            const Formula derived = derive_formula(i, m, reg);
            const Formula printed = transcribed_generic({i, m});
            ++formulas;
            if (!derived.identical(printed)) {
                pass = false;
                failure = "power " + std::to_string(i) + " order " + std::to_string(m);
                break;
            }
            coefficients += derived.rhs.harmonic_terms().size() + 1;  // plus the free term
        }
    }
    pass = pass && coefficients >= 30;
    std::ostringstream detail;
    detail << formulas << " formulas re-derived, " << coefficients << " coefficient equalities";
    if (!failure.empty()) detail << "; mismatch at " << failure;
    report(4, pass, "derivation reproduces the transcriptions", detail.str());
}

// 5. The engine extends past the printed range: (5,1), (5,2), (6,1) verify on
//    the default grid in under 2 minutes.
void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    FormulaRegistry reg;
    const Grid grid = default_grid();
    bool pass = true;
    std::size_t points = 0;
    std::string failure;
    for (const auto [i, m] : {std::pair<unsigned, unsigned>{5, 1}, {5, 2}, {6, 1}}) {
        try {
            const Formula f = derive_formula(i, m, reg, grid);
            const auto rep = verify_formula(f, grid);
            points += rep.total;
            if (!(rep.ok() && rep.total > 0)) {
                pass = false;
                failure = "power " + std::to_string(i) + " order " + std::to_string(m);
            }
        } catch (const error& e) {
            pass = false;
            failure = e.what();
        }
    }
    const double secs = seconds_since(t0);
    pass = pass && secs < 120.0;
    std::ostringstream detail;
    detail << "3 extension formulas, " << points << " grid points, " << secs << " s";
    if (!failure.empty()) detail << "; failed: " << failure;
    report(5, pass, "extension to powers 5 and 6", detail.str());
}

// 6. The derivative operator: linearity on 100 random expressions and
//    second-order central-difference consistency on 20 expressions.
void criterion6() {
    std::mt19937_64 rng(0x6eedULL);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> deg(0, 2);
    std::uniform_int_distribution<unsigned> orders(1, 3);
    auto rand_poly = [&]() {
        MultiPoly p;
        for (int t = 0; t < 3; ++t) {
            Monomial m;
            m.e = {deg(rng), deg(rng), 0};
            p += MultiPoly::from_term(Rational(coeff(rng)), m);
        }
        return p;
    };
    auto rand_expr = [&](bool force_harmonic) {
        HExpr e;
        const unsigned nterms = orders(rng) + (force_harmonic ? 1u : 0u);
        for (unsigned t = 0; t < nterms; ++t) e.add_term(orders(rng), RationalFn(rand_poly()));
        e.add_free(RationalFn(rand_poly()));
        return e;
    };

    bool linear_ok = true;
    for (int it = 0; it < 100 && linear_ok; ++it) {
        const HExpr e1 = rand_expr(false), e2 = rand_expr(false);
        const RationalFn a{Rational(coeff(rng))}, b{Rational(coeff(rng))};
        linear_ok = ((e1.scaled(a) + e2.scaled(b)).dx() == e1.dx().scaled(a) + e2.dx().scaled(b));
    }

    const Rational h1(1, 1000), h2(1, 10000);
    const Rational x0(3, 7);
    const std::uint64_t n = 4;
    int checked = 0;
    bool ratio_ok = true;
    Rational worst_lo(100), worst_hi(100);
    while (checked < 20 && ratio_ok) {
        const HExpr e = rand_expr(true);
        if (e.dx().dx().dx().eval(x0, n).is_zero()) continue;  // no h^2 term to measure
        const Rational exact = e.dx().eval(x0, n);
        auto central = [&](const Rational& h) { return (e.eval(x0 + h, n) - e.eval(x0 - h, n)) / (Rational(2) * h); };
        const Rational err1 = (central(h1) - exact).abs();
        const Rational err2 = (central(h2) - exact).abs();
        if (err2.is_zero()) continue;
        const Rational ratio = err1 / err2;
        if (ratio < worst_lo) worst_lo = ratio;
        if (ratio > worst_hi) worst_hi = ratio;
        ratio_ok = (ratio >= Rational(50) && ratio <= Rational(200));
        ++checked;
    }
    const bool pass = linear_ok && ratio_ok && checked == 20;
    std::ostringstream detail;
    detail << "linearity on 100 expressions; error ratios on 20 expressions in [" << worst_lo.to_decimal_string(6)
           << ", " << worst_hi.to_decimal_string(6) << "] (gate [50, 200])";
    report(6, pass, "derivative operator correctness", detail.str());
}

// 7. Closed form at n = 10^4 beats the quadratic oracle by >= 50x with
//    identical exact values.
void criterion7() {
    BenchOptions opt;
    opt.repetitions = 1;
    opt.run_serial = true;
    opt.run_parallel = false;
    const auto rows = run_bench({2, 1}, Rational(0), {10000}, opt);
    bool pass = rows.size() == 1 && rows[0].match && rows[0].closed_ms > 0;
    double speedup = 0;
    if (pass) {
        speedup = rows[0].naive_ms / rows[0].closed_ms;
        pass = speedup >= 50.0;
    }
    std::ostringstream detail;
    if (!rows.empty()) {
        detail << "n = 10000: naive " << rows[0].naive_ms << " ms, closed " << rows[0].closed_ms << " ms, speedup "
               << speedup << "x (gate 50x), values " << (rows[0].match ? "identical" : "DIFFER");
    }
    report(7, pass, "closed form outruns the quadratic oracle", detail.str());
}

// 8. 100 randomly selected registry formulas survive the json round-trip
//    with exact (representation-level) equality.
void criterion8() {
    FormulaRegistry reg;
    for (unsigned i = 0; i <= 6; ++i)
        for (unsigned m = 1; m <= (i <= 4 ? i + 2 : 2); ++m) derive_formula(i, m, reg);
    const auto entries = reg.entries();
    std::mt19937_64 rng(0x0857ULL);
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    bool pass = true;
    for (int draw = 0; draw < 100 && pass; ++draw) {
        const Formula& f = entries[pick(rng)];
        const std::string text = format_formula(f, FormulaStyle::json);
        const Formula back = parse_formula(text);
        pass = back.identical(f) && format_formula(back, FormulaStyle::json) == text;
    }
    std::ostringstream detail;
    detail << "100 draws from " << entries.size() << " registry formulas, bit-exact";
    report(8, pass, "formula json round-trip", detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::cout << "acceptance: " << (8 - g_failures) << "/8 criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
