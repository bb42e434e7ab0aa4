#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "harmsum/harmonic.hpp"

using harmsum::HarmonicQuery;
using harmsum::Rational;

namespace {

// Rationals that can never hit a pole of 1/(x+k): nonnegative, or non-integer.
Rational random_safe_x(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(2, 9);
    std::uniform_int_distribution<int> kind(0, 3);
    if (kind(rng) == 0) return Rational(std::abs(num(rng)));
    long n = num(rng), d = den(rng);
    if (n % d == 0) ++n;
    return Rational(n, d);
}

} // namespace

TEST_CASE("definitional values") {
    CHECK(harmsum::harmonic_general(0, 3, Rational(5, 7)) == Rational(0));
    CHECK(harmsum::harmonic_general(3, 1, Rational(0)) == Rational(11, 6));
    CHECK(harmsum::harmonic_general(2, 2, Rational(1, 2)) == Rational(136, 225));
    CHECK(harmsum::harmonic_general(HarmonicQuery{5, 1, Rational(0)}) == Rational(137, 60));
    // order 0: every summand is 1
    CHECK(harmsum::harmonic_general(7, 0, Rational(3, 2)) == Rational(7));
}

TEST_CASE("pole detection identifies the offending k") {
    try {
        harmsum::harmonic_general(5, 1, Rational(-3));
        FAIL("expected pole_error");
    } catch (const harmsum::pole_error& e) {
        CHECK(e.offending_k == 3);
    }
    // non-integer x in the same range is fine
    CHECK_NOTHROW(harmsum::harmonic_general(5, 1, Rational(-5, 2)));
    // pole outside the range is fine
    CHECK_NOTHROW(harmsum::harmonic_general(5, 1, Rational(-8)));
    // l = 0 has no poles
    CHECK_NOTHROW(harmsum::harmonic_general(5, 0, Rational(-3)));
}

TEST_CASE("shifted values") {
    CHECK(harmsum::harmonic_shifted(5, 1, 0) == Rational(137, 60));
    CHECK(harmsum::harmonic_shifted(2, 2, 1) == Rational(49, 36));
    // shift identity: H_3^. (x=2) = H_5 - H_2
    CHECK(harmsum::harmonic_general(3, 1, Rational(2)) == Rational(137, 60) - Rational(3, 2));
    CHECK(harmsum::harmonic_general(3, 1, Rational(2)) == Rational(47, 60));
}

TEST_CASE("prefix pass agrees with individual evaluations") {
    const auto h = harmsum::harmonic_prefix(12, 2, Rational(1, 3));
    REQUIRE(h.size() == 12);
    for (std::uint64_t k = 1; k <= 12; ++k) CHECK(h[k - 1] == harmsum::harmonic_general(k, 2, Rational(1, 3)));
}

TEST_CASE("range-split additivity") {
    std::mt19937_64 rng(0x11ULL);
    std::uniform_int_distribution<std::uint64_t> len(0, 14);
    std::uniform_int_distribution<unsigned> order(0, 4);
    for (int it = 0; it < 60; ++it) {
        const std::uint64_t a = len(rng), b = len(rng);
        const unsigned l = order(rng);
        const Rational x = random_safe_x(rng);
        const Rational whole = harmsum::harmonic_general(a + b, l, x);
        const Rational split =
            harmsum::harmonic_general(a, l, x) + harmsum::harmonic_general(b, l, x + Rational(static_cast<long>(a)));
        CHECK(whole == split);
    }
}

TEST_CASE("shift identity across random parameters") {
    std::mt19937_64 rng(0x22ULL);
    std::uniform_int_distribution<std::uint64_t> pn(0, 20);
    std::uniform_int_distribution<unsigned> order(0, 3);
    for (int it = 0; it < 60; ++it) {
        const std::uint64_t n = pn(rng), p = pn(rng);
        const unsigned l = order(rng);
        const Rational lhs = harmsum::harmonic_general(n, l, Rational(static_cast<long>(p)));
        const Rational rhs = harmsum::harmonic_shifted(n, l, p) - harmsum::harmonic_shifted(0, l, p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("strict monotonicity in n for x > -1, l >= 1") {
    std::mt19937_64 rng(0x33ULL);
    std::uniform_int_distribution<long> num(-6, 60);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<unsigned> order(1, 4);
    for (int it = 0; it < 60; ++it) {
        Rational x(num(rng), den(rng));
        if (x <= Rational(-1)) x = -x;
        const unsigned l = order(rng);
        Rational prev = harmsum::harmonic_general(0, l, x);
        for (std::uint64_t n = 1; n <= 6; ++n) {
            const Rational cur = harmsum::harmonic_general(n, l, x);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("moment oracle examples") {
    CHECK(harmsum::naive_moment_sum(0, 1, Rational(0), 5) == Rational(87, 10));
    CHECK(harmsum::naive_moment_sum(1, 1, Rational(0), 3) == Rational(19, 2));
    CHECK(harmsum::naive_moment_sum(2, 1, Rational(0), 2) == Rational(7));
    CHECK(harmsum::naive_moment_sum(3, 2, Rational(1, 2), 0) == Rational(0));
}

TEST_CASE("weight-0 moment equals the prefix total") {
    std::mt19937_64 rng(0x44ULL);
    std::uniform_int_distribution<std::uint64_t> len(0, 15);
    std::uniform_int_distribution<unsigned> order(0, 3);
    for (int it = 0; it < 40; ++it) {
        const std::uint64_t n = len(rng);
        const unsigned l = order(rng);
        const Rational x = random_safe_x(rng);
        Rational expect(0);
        for (std::uint64_t k = 1; k <= n; ++k) expect += harmsum::harmonic_general(k, l, x);
        CHECK(harmsum::naive_moment_sum(0, l, x, n) == expect);
    }
}

TEST_CASE("memoized, quadratic and parallel oracles agree") {
    std::mt19937_64 rng(0x55ULL);
    std::uniform_int_distribution<std::uint64_t> len(0, 25);
    std::uniform_int_distribution<unsigned> order(0, 3);
    std::uniform_int_distribution<unsigned> weight(0, 5);
    for (int it = 0; it < 25; ++it) {
        const std::uint64_t n = len(rng);
        const unsigned l = order(rng), i = weight(rng);
        const Rational x = random_safe_x(rng);
        const Rational a = harmsum::naive_moment_sum(i, l, x, n);
        const Rational b = harmsum::naive_moment_sum_quadratic(i, l, x, n);
        const Rational c = harmsum::naive_moment_sum_quadratic_parallel(i, l, x, n);
        CHECK(a == b);
        CHECK(b == c);
    }
}

TEST_CASE("shifted oracle matches the generic oracle through the shift identity") {
    for (std::uint64_t p = 0; p <= 4; ++p)
        for (std::uint64_t n = 0; n <= 8; ++n)
            for (unsigned i = 0; i <= 3; ++i)
                for (unsigned m = 1; m <= 3; ++m) {
                    const Rational via_shift = harmsum::naive_moment_sum_shifted(i, m, p, n);
                    Rational direct(0);
                    for (std::uint64_t k = 1; k <= n; ++k)
                        direct += Rational(harmsum::Int::pow(harmsum::Int(static_cast<long>(k)), i)) *
                                  harmsum::harmonic_shifted(k, m, p);
                    CHECK(via_shift == direct);
                }
}

TEST_CASE("identity of the telescoping binomial sum: worked points") {
    auto [l1, r1] = harmsum::identity1_sides(Rational(1, 3), Rational(1, 3), 4);
    CHECK(l1 == Rational(4));
    CHECK(r1 == Rational(4));
    auto [l2, r2] = harmsum::identity1_sides(Rational(1, 2), Rational(3, 2), 1);
    CHECK(l2 == Rational(5, 3));
    CHECK(r2 == Rational(5, 3));
    auto [l3, r3] = harmsum::identity1_sides(Rational(0), Rational(1), 3);
    CHECK(l3 == Rational(9));
    CHECK(r3 == Rational(9));
}

TEST_CASE("identity of the weighted binomial sum: worked points") {
    auto [l1, r1] = harmsum::identity2_sides(Rational(0), Rational(0), 2);
    CHECK(l1 == Rational(5, 2));
    CHECK(r1 == Rational(5, 2));
    auto [l2, r2] = harmsum::identity2_sides(Rational(1, 2), Rational(1, 2), 1);
    CHECK(l2 == Rational(2, 3));
    CHECK(r2 == Rational(2, 3));
    auto [l3, r3] = harmsum::identity2_sides(Rational(0), Rational(1), 2);
    CHECK(l3 == Rational(13, 2));
    CHECK(r3 == Rational(13, 2));
}

TEST_CASE("identity domain errors") {
    CHECK_THROWS_AS(harmsum::identity1_sides(Rational(2), Rational(1), 3), harmsum::domain_error);  // y-x+1 = 0
    CHECK_THROWS_AS(harmsum::identity2_sides(Rational(-2), Rational(0), 3), harmsum::pole_error);
}

TEST_CASE("identities hold on randomized samples") {
    std::mt19937_64 rng(0x66ULL);
    std::uniform_int_distribution<std::uint64_t> len(0, 30);
    int done = 0;
    while (done < 220) {
        const Rational x = random_safe_x(rng);
        const Rational y = random_safe_x(rng);
        if ((y - x + Rational(1)).is_zero()) continue;
        const std::uint64_t n = len(rng);
        auto [a1, b1] = harmsum::identity1_sides(x, y, n);
        auto [a2, b2] = harmsum::identity2_sides(x, y, n);
        CHECK(a1 == b1);
        CHECK(a2 == b2);
        ++done;
    }
}
