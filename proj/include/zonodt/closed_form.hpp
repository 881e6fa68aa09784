#ifndef ZONODT_CLOSED_FORM_HPP
#define ZONODT_CLOSED_FORM_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zonodt/caps.hpp"
#include "zonodt/partition.hpp"

namespace zonodt {

long long mobius(long long d);
long long euler_phi(long long d);

// C_d(b) = mu(d/g) phi(d) / phi(d/g) with g = gcd(b, d).
long long ramanujan_sum(long long d, long long b);

struct CohenReport {
    bool pass = true;
    long long checks = 0;
    std::string detail;
};

// Brute-force sum of C_d(a) C_e(b) over a + b = p (mod q) against the closed
// form: 0 when d != e, q C_d(p) when d = e. Requires d | q and e | q.
CohenReport cohen_orthogonality_check(long long p, long long q, long long d, long long e);

// k-fold version: sum over a_1 + ... + a_k = p (mod q) of the product of
// C_{d_i}(a_i), which is q^{k-1} C_d(p) when all d_i = d and 0 otherwise.
CohenReport cohen_orthogonality_check_k(long long p, long long q,
                                        const std::vector<long long>& ds);

struct DSet {
    long long m = 0, n = 0, r = 0, s = 0;
    // Vectors y of length r with 0 <= y_i <= mn-1 and sum y_i = s (mod mn),
    // in lexicographic order.
    std::vector<std::vector<int>> points;
};

DSet enumerate_dset(long long m, long long n, long long r, long long s,
                    long long max_points = kMaxDsetPointsDefault);

// Orbit count of the coordinate-permutation action of the Young subgroup of
// shape lambda on the point set above (r = number of parts of lambda is not
// used; coordinates are grouped into consecutive blocks of sizes lambda_i).
// Exhaustive oracle: canonicalize by sorting within blocks.
long long dset_orbit_count(long long m, long long n, const Partition& lambda, long long s,
                           long long max_points = kMaxDsetPointsDefault);
long long dset_orbit_count_serial(long long m, long long n, const Partition& lambda,
                                  long long s, long long max_points = kMaxDsetPointsDefault);

// (1/(mn)) sum over d | gcd(gcd(lambda), mn) of
//   C_d(s) prod_i binom((mn + lambda_i)/d - 1, lambda_i/d).
mpz_class orbit_formula(long long m, const Partition& lambda, long long s);

// (1/(mn^2)) sum over d | gcd(lambda) of
//   (-1)^{mn + mn/d} mu(d) prod_i binom((mn + lambda_i)/d - 1, lambda_i/d),
// with n the weight of lambda.
mpz_class dt_multipartite(long long m, const Partition& lambda);

// Loop-quiver specialization: (1/(mn^2)) sum over d | n of
//   (-1)^{mn + mn/d} mu(d) binom((m+1)n/d - 1, n/d).
mpz_class reineke_dt(long long m, long long n);

} // namespace zonodt

#endif
