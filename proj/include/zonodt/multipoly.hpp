#ifndef ZONODT_MULTIPOLY_HPP
#define ZONODT_MULTIPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "zonodt/perm_group.hpp"

namespace zonodt {

// Sparse multivariate polynomial over exact rationals. Terms map exponent
// vectors to nonzero coefficients.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, mpq_class>;

    explicit MultiPoly(int nvars = 0) : n_(nvars) {}

    static MultiPoly constant(int nvars, const mpq_class& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly linear_form(const std::vector<mpq_class>& coeffs);

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    long long degree() const;  // -1 when zero
    bool is_homogeneous() const;
    const TermMap& terms() const { return terms_; }
    mpq_class coefficient(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const mpq_class& c) const;
    MultiPoly pow(int k) const;

    // Variable relabeling x_i -> x_{sigma[i]}.
    MultiPoly permuted(const Perm& sigma) const;

    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

    void add_term(const Exponents& e, const mpq_class& c);

private:
    int n_;
    TermMap terms_;
};

// f with every variable of p replaced by the matching partial derivative,
// applied to g.
MultiPoly apply_operator(const MultiPoly& p, const MultiPoly& g);

// Sum of the partial derivatives over the vertices in mask, applied once.
MultiPoly directional_derivative(const MultiPoly& f, uint32_t mask);

} // namespace zonodt

#endif
