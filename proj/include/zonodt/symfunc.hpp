#ifndef ZONODT_SYMFUNC_HPP
#define ZONODT_SYMFUNC_HPP

#include <gmpxx.h>

#include <map>

#include "zonodt/multigraph.hpp"
#include "zonodt/partition.hpp"

namespace zonodt {

// Homogeneous symmetric function in the complete homogeneous ('h'),
// monomial ('m'), or Schur ('s') basis. Coefficients of value zero are
// never stored.
struct SymFunc {
    char basis = 'h';
    std::map<Partition, mpq_class> coeffs;
};

// Frobenius characteristic of the S_n permutation action on the break
// divisors of a complete graph with uniform edge multiplicity: one h_type
// summand per orbit, where type lists the value multiplicities of a
// representative.
SymFunc frobenius_h(const Multigraph& g);

// Semistandard tableaux of shape lambda and content mu.
mpz_class kostka(const Partition& lambda, const Partition& mu);

SymFunc convert(const SymFunc& f, char target);

// Orbit count of the Young subgroup of shape lambda acting on the break
// divisors of a complete graph with uniform edge multiplicity.
long long monomial_coefficient(const Multigraph& g, const Partition& lambda);

} // namespace zonodt

#endif
