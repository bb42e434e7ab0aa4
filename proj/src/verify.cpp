#include "harmsum/verify.hpp"

#include <random>

#include "harmsum/harmonic.hpp"

namespace harmsum {

Grid default_grid() {
    Grid g;
    g.xs = {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(-1, 2), Rational(3, 7), Rational(5, 2)};
    g.ns = {0, 1, 2, 3, 5, 8, 13, 21};
    return g;
}

namespace {

bool is_pole(const Rational& x, std::uint64_t n) {
    try {
        check_no_pole(x, n);
        return false;
    } catch (const pole_error&) {
        return true;
    }
}

void finalize(VerifyReport& r) {
    for (const auto& p : r.failures) {
        if (!r.first_failure) r.first_failure = p;
    }
    r.no_coverage = (r.total == 0);
}

} // namespace

VerifyReport verify_formula(const Formula& f, const Grid& grid) {
    const std::size_t nx = grid.xs.size(), nn = grid.ns.size();
    std::vector<VerifyPoint> points(nx * nn);
    std::vector<char> skipped(nx * nn, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(nx * nn); ++idx) {
        const Rational& x = grid.xs[static_cast<std::size_t>(idx) / nn];
        const std::uint64_t n = grid.ns[static_cast<std::size_t>(idx) % nn];
        if (is_pole(x, n) || !f.rhs.defined_at(x, n)) {
            skipped[idx] = 1;
            continue;
        }
        VerifyPoint p;
        p.x = x;
        p.n = n;
        p.expected = naive_moment_sum(f.power, f.order, x, n);
        p.got = f.rhs.eval(x, n);
        p.pass = (p.expected == p.got);
        points[idx] = std::move(p);
    }

    VerifyReport r;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        if (skipped[idx]) {
            ++r.skipped;
            continue;
        }
        ++r.total;
        if (points[idx].pass)
            ++r.passed;
        else
            r.failures.push_back(points[idx]);
    }
    finalize(r);
    return r;
}

VerifyReport verify_shifted(const ShiftedFormula& s, const std::vector<std::uint64_t>& ps,
                            const std::vector<std::uint64_t>& ns) {
    const std::size_t np = ps.size(), nn = ns.size();
    std::vector<VerifyPoint> points(np * nn);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(np * nn); ++idx) {
        const std::uint64_t p = ps[static_cast<std::size_t>(idx) / nn];
        const std::uint64_t n = ns[static_cast<std::size_t>(idx) % nn];
        VerifyPoint pt;
        pt.x = Rational(static_cast<long>(p));
        pt.n = n;
        pt.expected = naive_moment_sum_shifted(s.power, s.order, p, n);
        pt.got = s.eval(p, n);
        pt.pass = (pt.expected == pt.got);
        points[idx] = std::move(pt);
    }

    VerifyReport r;
    for (auto& pt : points) {
        ++r.total;
        if (pt.pass)
            ++r.passed;
        else
            r.failures.push_back(pt);
    }
    finalize(r);
    return r;
}

IdentityReport sample_identity(int which, std::size_t count, std::uint64_t max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<std::uint64_t> len(0, max_n);

    auto draw = [&rng, &num, &den]() { return Rational(num(rng), den(rng)); };

    IdentityReport rep;
    while (rep.samples < count) {
        const Rational x = draw();
        const Rational y = draw();
        const std::uint64_t n = len(rng);
        if ((y - x + Rational(1)).is_zero() || is_pole(x, n)) continue;
        const auto [lhs, rhs] = (which == 1) ? identity1_sides(x, y, n) : identity2_sides(x, y, n);
        ++rep.samples;
        if (lhs == rhs) {
            ++rep.passed;
        } else if (rep.first_witness.empty()) {
            rep.first_witness = "x = " + x.to_string() + ", y = " + y.to_string() + ", n = " + std::to_string(n) +
                                ": lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
        }
    }
    return rep;
}

} // namespace harmsum
