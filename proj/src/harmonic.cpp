#include "harmsum/harmonic.hpp"

#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harmsum {

void check_no_pole(const Rational& x, std::uint64_t n) {
    if (n == 0 || !x.is_integer()) return;
    const Int v = x.num();
    if (v.sign() >= 0) return;
    const Int neg = -v;
    if (neg >= Int(1l) && neg <= Int(static_cast<unsigned long>(n))) {
        const std::uint64_t k = static_cast<std::uint64_t>(neg.to_long());
        throw pole_error(x.to_string(), k);
    }
}

Rational harmonic_general(const HarmonicQuery& q) {
    if (q.l == 0) return Rational(q.n);
    check_no_pole(q.x, q.n);
    Rational sum(0);
    for (std::uint64_t k = 1; k <= q.n; ++k)
        sum += Rational::pow(q.x + Rational(static_cast<std::uint64_t>(k)), q.l).inverse();
    return sum;
}

Rational harmonic_general(std::uint64_t n, unsigned l, const Rational& x) {
    return harmonic_general(HarmonicQuery{n, l, x});
}

std::vector<Rational> harmonic_prefix(std::uint64_t n, unsigned l, const Rational& x) {
    if (l >= 1) check_no_pole(x, n);
    std::vector<Rational> out;
    out.reserve(n);
    Rational sum(0);
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (l == 0)
            sum = Rational(k);
        else
            sum += Rational::pow(x + Rational(k), l).inverse();
        out.push_back(sum);
    }
    return out;
}

Rational harmonic_shifted(std::uint64_t n, unsigned l, std::uint64_t p) {
    return harmonic_general(p + n, l, Rational(0));
}

namespace {

/// Cross-call cache of harmonic prefixes, keyed by (l, x); extended on demand.
class PrefixMemo {
public:
    std::vector<Rational> prefix(unsigned l, const Rational& x, std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& stored = memo_[{l, x}];
        if (stored.size() < n) {
            Rational sum = stored.empty() ? Rational(0) : stored.back();
            for (std::uint64_t k = stored.size() + 1; k <= n; ++k) {
                if (l == 0)
                    sum = Rational(k);
                else
                    sum += Rational::pow(x + Rational(k), l).inverse();
                stored.push_back(sum);
            }
        }
        return {stored.begin(), stored.begin() + static_cast<std::ptrdiff_t>(n)};
    }

private:
    std::mutex mu_;
    std::map<std::pair<unsigned, Rational>, std::vector<Rational>> memo_;
};

Rational weight_pow(std::uint64_t k, unsigned i) {
    return Rational(Int::pow(Int(static_cast<unsigned long>(k)), i));
}

} // namespace

Rational naive_moment_sum(unsigned i, unsigned l, const Rational& x, std::uint64_t n) {
    if (l >= 1) check_no_pole(x, n);
    static PrefixMemo memo;
    const std::vector<Rational> h = memo.prefix(l, x, n);
    Rational sum(0);
    for (std::uint64_t k = 1; k <= n; ++k) sum += weight_pow(k, i) * h[k - 1];
    return sum;
}

Rational naive_moment_sum_quadratic(unsigned i, unsigned l, const Rational& x, std::uint64_t n) {
    if (l >= 1) check_no_pole(x, n);
    Rational sum(0);
    for (std::uint64_t k = 1; k <= n; ++k) sum += weight_pow(k, i) * harmonic_general(k, l, x);
    return sum;
}

Rational naive_moment_sum_quadratic_parallel(unsigned i, unsigned l, const Rational& x, std::uint64_t n) {
#ifdef _OPENMP
    if (l >= 1) check_no_pole(x, n);
    std::vector<Rational> terms(n);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(n); ++idx) {
        const std::uint64_t k = static_cast<std::uint64_t>(idx) + 1;
        terms[idx] = weight_pow(k, i) * harmonic_general(k, l, x);
    }
    Rational sum(0);
    for (const Rational& t : terms) sum += t;
    return sum;
#else
    return naive_moment_sum_quadratic(i, l, x, n);
#endif
}

Rational naive_moment_sum_shifted(unsigned i, unsigned l, std::uint64_t p, std::uint64_t n) {
    const std::vector<Rational> h = harmonic_prefix(p + n, l, Rational(0));
    Rational sum(0);
    for (std::uint64_t k = 1; k <= n; ++k) sum += weight_pow(k, i) * h[p + k - 1];
    return sum;
}

namespace {

void check_identity_domain(const Rational& x, const Rational& y, std::uint64_t n) {
    if ((y - x + Rational(1)).is_zero())
        throw domain_error("identity undefined: y - x + 1 = 0 (x = " + x.to_string() + ", y = " + y.to_string() + ")");
    check_no_pole(x, n);
}

} // namespace

std::pair<Rational, Rational> identity1_sides(const Rational& x, const Rational& y, std::uint64_t n) {
    check_identity_domain(x, y, n);
    Rational lhs(0);
    Rational ratio(1);       // C(y+k,k)/C(x+k,k) = prod_{j<=k} (y+j)/(x+j)
    Rational tail_ratio(1);  // C(y+n+1,n)/C(x+n,n) = prod_{j<=n} (y+1+j)/(x+j)
    for (std::uint64_t k = 1; k <= n; ++k) {
        const Rational kk{k};
        ratio *= (y + kk) / (x + kk);
        tail_ratio *= (y + Rational(1) + kk) / (x + kk);
        lhs += ratio;
    }
    const Rational c = (y + Rational(1)) / (y - x + Rational(1));
    const Rational rhs = tail_ratio * c - c;
    return {lhs, rhs};
}

std::pair<Rational, Rational> identity2_sides(const Rational& x, const Rational& y, std::uint64_t n) {
    check_identity_domain(x, y, n);
    Rational lhs(0);
    Rational ratio(1);
    Rational tail_ratio(1);
    Rational h(0);  // H_k(x)
    for (std::uint64_t k = 1; k <= n; ++k) {
        const Rational kk{k};
        ratio *= (y + kk) / (x + kk);
        tail_ratio *= (y + Rational(1) + kk) / (x + kk);
        h += (x + kk).inverse();
        lhs += ratio * h;
    }
    const Rational d = y - x + Rational(1);
    const Rational c = (y + Rational(1)) / d;
    const Rational rhs = c * tail_ratio * (h - d.inverse()) + (y + Rational(1)) / (d * d);
    return {lhs, rhs};
}

} // namespace harmsum
