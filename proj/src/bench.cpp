#include "harmsum/bench.hpp"

#include <chrono>

#include "harmsum/harmonic.hpp"

namespace harmsum {

namespace {

template <typename F>
double best_of(unsigned reps, Rational& out, F&& fn) {
    double best = -1.0;
    for (unsigned r = 0; r < (reps == 0 ? 1 : reps); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        out = fn();
        const auto t1 = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        if (best < 0.0 || ms < best) best = ms;
    }
    return best;
}

} // namespace

std::vector<BenchRow> run_bench(MomentKey key, const Rational& x, const std::vector<std::uint64_t>& ns,
                                const BenchOptions& opt) {
    std::vector<BenchRow> rows;
    for (const std::uint64_t n : ns) {
        BenchRow row;
        row.n = n;

        Rational closed_value;
        row.closed_ms = best_of(opt.repetitions, closed_value, [&] { return closed_moment_sum(key, x, n); });
        row.value = closed_value;

        if (opt.run_serial) {
            Rational naive_value;
            row.naive_ms = best_of(opt.repetitions, naive_value,
                                   [&] { return naive_moment_sum_quadratic(key.power, key.order, x, n); });
            row.match = row.match && (naive_value == closed_value);
        }
        if (opt.run_parallel) {
            Rational omp_value;
            row.naive_omp_ms = best_of(opt.repetitions, omp_value,
                                       [&] { return naive_moment_sum_quadratic_parallel(key.power, key.order, x, n); });
            row.match = row.match && (omp_value == closed_value);
        }
        const bool ok = row.match;
        rows.push_back(std::move(row));
        if (!ok) break;  // a value mismatch invalidates any further timing
    }
    return rows;
}

} // namespace harmsum
