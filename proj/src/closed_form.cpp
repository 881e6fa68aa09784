#include "zonodt/closed_form.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "zonodt/errors.hpp"

namespace zonodt {

long long mobius(long long d) {
    if (d <= 0) throw ValidationError("mobius: argument must be positive");
    long long result = 1;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        d /= p;
        if (d % p == 0) return 0;
        result = -result;
    }
    if (d > 1) result = -result;
    return result;
}

long long euler_phi(long long d) {
    if (d <= 0) throw ValidationError("euler_phi: argument must be positive");
    long long result = d;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

long long ramanujan_sum(long long d, long long b) {
    if (d <= 0) throw ValidationError("ramanujan_sum: modulus must be positive");
    const long long res = ((b % d) + d) % d;
    const long long g = std::gcd(res, d);
    const long long mu = mobius(d / g);
    if (mu == 0) return 0;
    const long long num = mu * euler_phi(d);
    const long long den = euler_phi(d / g);
    if (num % den != 0) throw std::logic_error("ramanujan_sum: inexact division");
    return num / den;
}

CohenReport cohen_orthogonality_check(long long p, long long q, long long d, long long e) {
    return cohen_orthogonality_check_k(p, q, {d, e});
}

CohenReport cohen_orthogonality_check_k(long long p, long long q,
                                        const std::vector<long long>& ds) {
    if (q <= 0) throw ValidationError("cohen check: modulus must be positive");
    if (ds.empty()) throw ValidationError("cohen check: need at least one divisor");
    for (long long d : ds)
        if (d <= 0 || q % d != 0)
            throw ValidationError("cohen check: " + std::to_string(d) + " does not divide " +
                                  std::to_string(q));
    const std::size_t k = ds.size();
    double size = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) size *= static_cast<double>(q);
    if (size > 1e8) throw CapExceeded("cohen check: q^(k-1) too large to enumerate");

    std::vector<std::vector<long long>> tables(k);
    for (std::size_t i = 0; i < k; ++i) {
        tables[i].resize(q);
        for (long long a = 0; a < q; ++a) tables[i][a] = ramanujan_sum(ds[i], a);
    }

    mpz_class total = 0;
    std::vector<long long> a(k, 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t pos, long long sum) {
        if (pos + 1 == k) {
            const long long last = ((p - sum) % q + q) % q;
            mpz_class prod(static_cast<long>(tables[pos][last]));
            for (std::size_t i = 0; i + 1 < k; ++i) prod *= static_cast<long>(tables[i][a[i]]);
            total += prod;
            return;
        }
        for (a[pos] = 0; a[pos] < q; ++a[pos]) rec(pos + 1, sum + a[pos]);
    };
    rec(0, 0);

    const bool all_equal = std::all_of(ds.begin(), ds.end(),
                                       [&](long long d) { return d == ds[0]; });
    mpz_class expected = 0;
    if (all_equal) {
        expected = static_cast<long>(ramanujan_sum(ds[0], p));
        for (std::size_t i = 0; i + 1 < k; ++i) expected *= static_cast<long>(q);
    }

    CohenReport report;
    report.checks = 1;
    if (total != expected) {
        report.pass = false;
        report.detail = "sum " + total.get_str() + " does not match closed form " +
                        expected.get_str();
    }
    return report;
}

DSet enumerate_dset(long long m, long long n, long long r, long long s, long long max_points) {
    if (m < 1 || n < 1 || r < 1) throw ValidationError("dset: m, n, r must be positive");
    const long long mn = m * n;
    if (s < 0 || s >= mn) throw ValidationError("dset: s must lie in [0, mn-1]");
    double count = 1;
    for (long long i = 0; i + 1 < r; ++i) count *= static_cast<double>(mn);
    if (count > static_cast<double>(max_points))
        throw CapExceeded("dset: (mn)^(r-1) exceeds the point cap");

    DSet out;
    out.m = m;
    out.n = n;
    out.r = r;
    out.s = s;
    std::vector<int> y(r, 0);
    std::function<void(long long, long long)> rec = [&](long long pos, long long sum) {
        if (pos + 1 == r) {
            y[pos] = static_cast<int>(((s - sum) % mn + mn) % mn);
            out.points.push_back(y);
            return;
        }
        for (long long v = 0; v < mn; ++v) {
            y[pos] = static_cast<int>(v);
            rec(pos + 1, sum + v);
        }
    };
    rec(0, 0);
    return out;
}

namespace {

long long dset_orbit_core(long long m, long long n, const Partition& lambda, long long s,
                          long long max_points, bool parallel) {
    validate_partition(lambda);
    if (m < 1) throw ValidationError("dset orbit count: m must be positive");
    if (partition_weight(lambda) != n)
        throw ValidationError("dset orbit count: lambda must be a partition of n");
    const long long mn = m * n;
    if (s < 0 || s >= mn) throw ValidationError("dset orbit count: s must lie in [0, mn-1]");
    const long long r = n;
    if (mn > 32 || r > 12)
        throw ValidationError("dset orbit oracle supports mn <= 32 and at most 12 coordinates");
    double count = 1;
    for (long long i = 0; i + 1 < r; ++i) count *= static_cast<double>(mn);
    if (count > static_cast<double>(max_points))
        throw CapExceeded("dset orbit count: (mn)^(r-1) exceeds the point cap");

    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t offset = 0;
    for (long long part : lambda) {
        blocks.push_back({offset, offset + static_cast<std::size_t>(part)});
        offset += static_cast<std::size_t>(part);
    }

    const auto sweep = [&](long long first_lo, long long first_hi,
                           std::vector<uint64_t>& sink) {
        std::vector<int> y(r, 0);
        std::vector<int> canon(r, 0);
        std::function<void(long long, long long)> rec = [&](long long pos, long long sum) {
            if (pos + 1 == r) {
                y[pos] = static_cast<int>(((s - sum) % mn + mn) % mn);
                std::copy(y.begin(), y.end(), canon.begin());
                for (const auto& [lo, hi] : blocks)
                    std::sort(canon.begin() + lo, canon.begin() + hi);
                uint64_t packed = 0;
                for (int v : canon) packed = (packed << 5) | static_cast<uint64_t>(v);
                sink.push_back(packed);
                return;
            }
            for (long long v = 0; v < mn; ++v) {
                y[pos] = static_cast<int>(v);
                rec(pos + 1, sum + v);
            }
        };
        if (r == 1) {
            rec(0, 0);
            return;
        }
        for (long long first = first_lo; first < first_hi; ++first) {
            y[0] = static_cast<int>(first);
            rec(1, first);
        }
    };

    std::vector<uint64_t> all;
    if (parallel && r > 1) {
        std::vector<std::vector<uint64_t>> partial(mn);
#pragma omp parallel for schedule(dynamic)
        for (long long first = 0; first < mn; ++first)
            sweep(first, first + 1, partial[first]);
        std::size_t total = 0;
        for (const auto& part : partial) total += part.size();
        all.reserve(total);
        for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
    } else {
        sweep(0, mn, all);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return static_cast<long long>(all.size());
}

std::vector<long long> divisors_of(long long n) {
    std::vector<long long> divs;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

mpz_class exact_quotient(const mpz_class& num, long long den, const char* what) {
    const long d = static_cast<long>(den);
    if (num % d != 0) throw std::logic_error(std::string(what) + ": inexact division");
    return num / d;
}

} // namespace

long long dset_orbit_count(long long m, long long n, const Partition& lambda, long long s,
                           long long max_points) {
    return dset_orbit_core(m, n, lambda, s, max_points, true);
}

long long dset_orbit_count_serial(long long m, long long n, const Partition& lambda,
                                  long long s, long long max_points) {
    return dset_orbit_core(m, n, lambda, s, max_points, false);
}

mpz_class orbit_formula(long long m, const Partition& lambda, long long s) {
    validate_partition(lambda);
    if (m < 1) throw ValidationError("orbit formula: m must be positive");
    const long long n = partition_weight(lambda);
    const long long mn = m * n;
    if (s < 0 || s >= mn) throw ValidationError("orbit formula: s must lie in [0, mn-1]");

    mpz_class total = 0;
    for (long long d : divisors_of(std::gcd(partition_gcd(lambda), mn))) {
        mpz_class term(static_cast<long>(ramanujan_sum(d, s)));
        for (long long part : lambda) term *= binomial((mn + part) / d - 1, part / d);
        total += term;
    }
    return exact_quotient(total, mn, "orbit_formula");
}

mpz_class dt_multipartite(long long m, const Partition& lambda) {
    validate_partition(lambda);
    if (m < 1) throw ValidationError("dt_multipartite: m must be positive");
    const long long n = partition_weight(lambda);
    if (n < 2) throw ValidationError("dt_multipartite: lambda must have weight at least 2");
    const long long mn = m * n;

    mpz_class total = 0;
    for (long long d : divisors_of(partition_gcd(lambda))) {
        mpz_class term(static_cast<long>(mobius(d)));
        if ((mn + mn / d) % 2 != 0) term = -term;
        for (long long part : lambda) term *= binomial((mn + part) / d - 1, part / d);
        total += term;
    }
    return exact_quotient(total, mn * n, "dt_multipartite");
}

mpz_class reineke_dt(long long m, long long n) {
    if (m < 1 || n < 1) throw ValidationError("reineke_dt: m and n must be positive");
    const long long mn = m * n;
    mpz_class total = 0;
    for (long long d : divisors_of(n)) {
        mpz_class term(static_cast<long>(mobius(d)));
        if ((mn + mn / d) % 2 != 0) term = -term;
        term *= binomial((m + 1) * n / d - 1, n / d);
        total += term;
    }
    return exact_quotient(total, mn * n, "reineke_dt");
}

} // namespace zonodt
