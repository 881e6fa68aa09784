#ifndef ZONODT_TUTTE_HPP
#define ZONODT_TUTTE_HPP

#include "zonodt/multigraph.hpp"

#include <vector>
#include <gmpxx.h>

namespace zonodt {

// Dense two-variable polynomial with nonnegative big-integer coefficients,
// coeff(i, j) = coefficient of x^i y^j.
class TuttePoly {
public:
    TuttePoly() = default;

    static TuttePoly constant(const mpz_class& c);
    static TuttePoly x_power(int k);

    const mpz_class& coeff(int i, int j) const;
    int x_degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    int y_degree() const;

    TuttePoly operator+(const TuttePoly& o) const;
    TuttePoly shifted_y(int k) const;  // multiply by y^k

    mpz_class eval(const mpz_class& x, const mpz_class& y) const;
    mpz_class tree_count() const { return eval(1, 1); }

    // Coefficients of q^g * T(1, 1/q), indices 0..g.
    std::vector<mpz_class> central_hilbert(long long g) const;

    bool operator==(const TuttePoly& o) const { return c_ == o.c_; }

private:
    std::vector<std::vector<mpz_class>> c_;  // c_[i][j], rows padded to equal width
    void trim();
};

// Deletion-contraction with memoization on a color-refined canonical key.
// Thread-safe; deterministic output.
TuttePoly tutte(const Multigraph& g);

// Drops the shared memo table (used by the benchmark for fair timing).
void tutte_memo_clear();

} // namespace zonodt

#endif
