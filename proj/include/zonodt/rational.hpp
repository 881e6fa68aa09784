#ifndef ZONODT_RATIONAL_HPP
#define ZONODT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace zonodt {

// mpq_class(a, b) does not reduce to lowest terms on its own.
inline mpq_class make_rational(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_decimal(const mpz_class& z) { return z.get_str(); }

mpz_class mpz_from_decimal(const std::string& s);

} // namespace zonodt

#endif
