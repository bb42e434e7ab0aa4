#ifndef HARMSUM_BENCH_HPP
#define HARMSUM_BENCH_HPP

#include <cstdint>
#include <vector>

#include "harmsum/closed_forms.hpp"

namespace harmsum {

struct BenchRow {
    std::uint64_t n = 0;
    double closed_ms = 0.0;
    double naive_ms = -1.0;      // serial reference; < 0 when not run
    double naive_omp_ms = -1.0;  // OpenMP kernel; < 0 when not run
    bool match = true;
    Rational value;
};

struct BenchOptions {
    unsigned repetitions = 1;  // each timing takes the best of this many runs
    bool run_serial = true;
    bool run_parallel = true;
};

/// Times closed-form evaluation against the O(n^2) oracle (serial reference
/// and OpenMP kernel) for each n. All values are computed exactly and
/// compared; a mismatch flips `match` and stops the run.
std::vector<BenchRow> run_bench(MomentKey key, const Rational& x, const std::vector<std::uint64_t>& ns,
                                const BenchOptions& opt);

} // namespace harmsum

#endif
