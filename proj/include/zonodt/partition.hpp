#ifndef ZONODT_PARTITION_HPP
#define ZONODT_PARTITION_HPP

#include <gmpxx.h>

#include <vector>

namespace zonodt {

// Weakly decreasing positive parts.
using Partition = std::vector<long long>;

void validate_partition(const Partition& p);

long long partition_weight(const Partition& p);
long long partition_gcd(const Partition& p);

// All partitions of n in lexicographically decreasing order, (n) first.
std::vector<Partition> partitions_of(long long n);

mpz_class binomial(long long a, long long b);
mpz_class factorial(long long n);

} // namespace zonodt

#endif
