#ifndef ZONODT_LINALG_HPP
#define ZONODT_LINALG_HPP

#include <vector>
#include <gmpxx.h>

namespace zonodt {

using IntMatrix = std::vector<std::vector<mpz_class>>;
using RatMatrix = std::vector<std::vector<mpq_class>>;

// Fraction-free Bareiss elimination. Both functions are exact and deterministic:
// pivot columns are scanned left to right, the pivot row is the remaining row with
// the fewest nonzero entries (ties by index), which keeps fill-in low on the sparse
// power-ideal matrices this project produces.
mpz_class bareiss_determinant(IntMatrix m);
long long bareiss_rank(IntMatrix m);

// Exact dense solve of a * x = b (a square, invertible). Used for the small
// partition-indexed basis-change systems.
std::vector<mpq_class> solve_linear(RatMatrix a, std::vector<mpq_class> b);

} // namespace zonodt

#endif
