#ifndef HARMSUM_VERIFY_HPP
#define HARMSUM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harmsum/formula.hpp"

namespace harmsum {

/// Cartesian sampling grid for formula verification.
struct Grid {
    std::vector<Rational> xs;
    std::vector<std::uint64_t> ns;
};

/// x in {0, 1, 2, 1/2, -1/2, 3/7, 5/2}, n in {0, 1, 2, 3, 5, 8, 13, 21}.
/// Mixes integers, non-integers and a negative non-pole value.
Grid default_grid();

struct VerifyPoint {
    Rational x;
    std::uint64_t n = 0;
    bool pass = false;
    Rational expected;
    Rational got;
};

struct VerifyReport {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;  // grid points filtered out (poles, vanishing denominators)
    std::vector<VerifyPoint> failures;
    std::optional<VerifyPoint> first_failure;
    bool no_coverage = false;  // vacuous pass: nothing was checked

    bool ok() const { return failures.empty(); }
};

/// Checks rhs(x, n) == sum_{k=1..n} k^power H_k^(order)(x) over the grid.
/// Points are evaluated concurrently when OpenMP is available; the report
/// order is by grid index regardless of scheduling.
VerifyReport verify_formula(const Formula& f, const Grid& grid);

/// Same for a shifted statement over p and n ranges.
VerifyReport verify_shifted(const ShiftedFormula& s, const std::vector<std::uint64_t>& ps,
                            const std::vector<std::uint64_t>& ns);

/// Randomized sampling of the two telescoping identities. Returns the failing
/// sample count and a textual witness for the first failure, if any.
struct IdentityReport {
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::string first_witness;

    bool ok() const { return samples == passed; }
};

IdentityReport sample_identity(int which, std::size_t count, std::uint64_t max_n, std::uint64_t seed);

} // namespace harmsum

#endif
