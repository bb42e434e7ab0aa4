#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "harmsum/closed_forms.hpp"
#include "harmsum/derive.hpp"
#include "harmsum/harmonic.hpp"

using harmsum::Assignment;
using harmsum::HExpr;
using harmsum::MultiPoly;
using harmsum::Rational;
using harmsum::RationalFn;
using harmsum::Var;

namespace {

const MultiPoly X = MultiPoly::variable(Var::x);
const MultiPoly N = MultiPoly::variable(Var::n);

HExpr random_hexpr(std::mt19937_64& rng, bool force_harmonic = false) {
    std::uniform_int_distribution<unsigned> orders(0, 3);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> deg(0, 2);
    auto rand_poly = [&]() {
        MultiPoly p;
        for (int t = 0; t < 3; ++t) {
            harmsum::Monomial m;
            m.e = {deg(rng), deg(rng), 0};
            p += MultiPoly::from_term(Rational(coeff(rng)), m);
        }
        return p;
    };
    HExpr e;
    const unsigned nterms = orders(rng) + (force_harmonic ? 1u : 0u);
    for (unsigned t = 0; t < nterms; ++t) {
        const unsigned l = 1 + (orders(rng) % 3);
        e.add_term(l, RationalFn(rand_poly()));
    }
    e.add_free(RationalFn(rand_poly()));
    return e;
}

} // namespace

TEST_CASE("H-expression basics") {
    HExpr e;
    CHECK(e.is_zero());
    e.add_term(2, RationalFn(X + 1));
    e.add_term(2, RationalFn(MultiPoly(-1) - X));
    CHECK(e.is_zero());  // cancelled coefficients are dropped
    // order-0 terms fold into the free term through H^(0) = n
    HExpr f;
    f.add_term(0, RationalFn(X));
    CHECK(f.harmonic_terms().empty());
    CHECK(f.free_term() == RationalFn(X * N));
}

TEST_CASE("derivative operator on the H-basis") {
    // D_x H^(1) = -H^(2)
    const HExpr h1 = HExpr::harmonic_term(1);
    const HExpr d1 = h1.dx();
    REQUIRE(d1.harmonic_terms().size() == 1);
    CHECK(d1.harmonic_terms().at(2) == RationalFn(-1));
    CHECK(d1.free_term().is_zero());

    // product rule: D_x (x*H^(2)) = H^(2) - 2x*H^(3)
    HExpr e = HExpr::harmonic_term(2, RationalFn(X));
    const HExpr d2 = e.dx();
    CHECK(d2.harmonic_terms().at(2) == RationalFn(1));
    CHECK(d2.harmonic_terms().at(3) == RationalFn(Rational(-2) * X));

    // free terms constant in x vanish
    CHECK(HExpr::constant(RationalFn(N * N)).dx().is_zero());
}

TEST_CASE("derivative matches the harmonic difference quotient structurally") {
    // eval(dx(e)) at rational points equals the analytic derivative of each
    // piece: spot-check via an independent hand expansion
    const HExpr e = HExpr::harmonic_term(1, RationalFn(X)) + HExpr::constant(RationalFn(X * X));
    const HExpr d = e.dx();
    // expected: H^(1) - x*H^(2) + 2x
    CHECK(d.harmonic_terms().at(1) == RationalFn(1));
    CHECK(d.harmonic_terms().at(2) == RationalFn(MultiPoly(0) - X));
    CHECK(d.free_term() == RationalFn(Rational(2) * X));
}

TEST_CASE("dx is linear on random expressions") {
    std::mt19937_64 rng(0x1dULL);
    for (int it = 0; it < 100; ++it) {
        const HExpr e1 = random_hexpr(rng);
        const HExpr e2 = random_hexpr(rng);
        std::uniform_int_distribution<long> scal(-5, 5);
        const RationalFn a{Rational(scal(rng))};
        const RationalFn b{Rational(scal(rng))};
        const HExpr lhs = (e1.scaled(a) + e2.scaled(b)).dx();
        const HExpr rhs = e1.dx().scaled(a) + e2.dx().scaled(b);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("eval substitutes exact harmonic values") {
    // (x+n+1) H^(1) - n  at x=0, n=5
    HExpr e = HExpr::harmonic_term(1, RationalFn(X + N + 1));
    e.add_free(RationalFn(MultiPoly(0) - N));
    CHECK(e.eval(Rational(0), 5) == Rational(87, 10) - Rational(0));  // equals the weight-0 sum
    CHECK(e.eval(Rational(0), 5) == harmsum::naive_moment_sum(0, 1, Rational(0), 5));
    CHECK(HExpr().eval(Rational(1, 2), 9) == Rational(0));
    // a vanishing coefficient denominator is reported with the coefficient
    const HExpr bad = HExpr::harmonic_term(1, RationalFn(MultiPoly(1), X));
    try {
        bad.eval(Rational(0), 2);
        FAIL("expected domain_error");
    } catch (const harmsum::domain_error& err) {
        CHECK(std::string(err.what()).find("denominator") != std::string::npos);
    }
}

TEST_CASE("identity2 right side as an H-expression") {
    // y = x: collapses to (x+n+1) H - n
    const HExpr e0 = harmsum::identity2_rhs_expr(0);
    REQUIRE(e0.harmonic_terms().size() == 1);
    CHECK(e0.harmonic_terms().at(1) == RationalFn(X + N + 1));
    CHECK(e0.harmonic_terms().at(1).is_polynomial());
    CHECK(e0.free_term() == RationalFn(MultiPoly(0) - N));
    CHECK(e0.eval(Rational(0), 2) == Rational(5, 2));

    // y = x + 1: evaluates to the weighted binomial sum it mirrors
    const HExpr e1 = harmsum::identity2_rhs_expr(1);
    const auto [lhs, rhs] = harmsum::identity2_sides(Rational(0), Rational(1), 3);
    CHECK(lhs == rhs);
    CHECK(e1.eval(Rational(0), 3) == lhs);
    // and pointwise across a small grid for several offsets
    for (unsigned i = 0; i <= 4; ++i) {
        const HExpr e = harmsum::identity2_rhs_expr(i);
        for (std::uint64_t n = 0; n <= 6; ++n) {
            const Rational x(1, 2);
            const auto sides = harmsum::identity2_sides(x, x + Rational(static_cast<long>(i)), n);
            CHECK(e.eval(x, n) == sides.first);
        }
    }
}

TEST_CASE("central differences of eval converge at second order") {
    std::mt19937_64 rng(0xd1ffULL);
    const Rational h1(1, 1000), h2(1, 10000);
    int checked = 0;
    while (checked < 20) {
        const HExpr e = random_hexpr(rng, /*force_harmonic=*/true);
        const Rational x0(3, 7);
        const std::uint64_t n = 4;
        // third x-derivative must not vanish at the sample point, otherwise
        // the h^2 term of the expansion is absent
        if (e.dx().dx().dx().eval(x0, n).is_zero()) continue;
        const Rational exact = e.dx().eval(x0, n);
        auto central = [&](const Rational& h) {
            return (e.eval(x0 + h, n) - e.eval(x0 - h, n)) / (Rational(2) * h);
        };
        const Rational err1 = (central(h1) - exact).abs();
        const Rational err2 = (central(h2) - exact).abs();
        if (err2.is_zero()) continue;
        const Rational ratio = err1 / err2;
        CHECK(ratio >= Rational(50));
        CHECK(ratio <= Rational(200));
        ++checked;
    }
}

TEST_CASE("power sums") {
    CHECK(harmsum::power_sum_poly(0) == N);
    CHECK(harmsum::power_sum_poly(1) == N * (N + 1) / Rational(2));
    CHECK(harmsum::power_sum_poly(2) == N * (N + 1) * (Rational(2) * N + 1) / Rational(6));
    CHECK(harmsum::power_sum_poly(3) == N * N * (N + 1) * (N + 1) / Rational(4));
    for (unsigned i = 0; i <= 8; ++i) {
        const MultiPoly s = harmsum::power_sum_poly(i);
        Rational direct(0);
        for (long k = 1; k <= 12; ++k) {
            direct += Rational::pow(Rational(k), i);
            CHECK(s.eval(Assignment::xn(Rational(0), Rational(k))) == direct);
        }
    }
}
