#include "zonodt/partition.hpp"

#include <numeric>
#include <string>

#include "zonodt/errors.hpp"

namespace zonodt {

void validate_partition(const Partition& p) {
    if (p.empty()) throw ValidationError("partition must have at least one part");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) throw ValidationError("partition parts must be positive");
        if (i > 0 && p[i] > p[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
    }
}

long long partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0ll);
}

long long partition_gcd(const Partition& p) {
    long long g = 0;
    for (long long v : p) g = std::gcd(g, v);
    return g;
}

namespace {

void partitions_rec(long long remaining, long long cap, Partition& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long long part = std::min(remaining, cap); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(long long n) {
    if (n < 0) throw ValidationError("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

mpz_class binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

mpz_class factorial(long long n) {
    if (n < 0) throw ValidationError("factorial of a negative number");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

} // namespace zonodt
