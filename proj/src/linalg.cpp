#include "zonodt/linalg.hpp"
#include "zonodt/errors.hpp"
#include "zonodt/rational.hpp"

#include <algorithm>
#include <cstddef>

namespace zonodt {

mpz_class mpz_from_decimal(const std::string& s) {
    if (s.empty()) throw ValidationError("empty integer string");
    mpz_class z;
    if (z.set_str(s, 10) != 0) throw ValidationError("bad integer string: " + s);
    return z;
}

namespace {

std::size_t row_weight(const std::vector<mpz_class>& row, std::size_t from_col) {
    std::size_t w = 0;
    for (std::size_t j = from_col; j < row.size(); ++j)
        if (row[j] != 0) ++w;
    return w;
}

// One column step of Bareiss elimination at pivot position (k, col).
// prev is the previous pivot (1 before the first step); divisions are exact.
void eliminate_below(IntMatrix& m, std::size_t k, std::size_t col, const mpz_class& prev) {
    const std::size_t rows = m.size(), cols = m[0].size();
    const mpz_class& piv = m[k][col];
    for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][col] == 0) {
            // still need the scale-and-divide to keep the minor structure
            for (std::size_t j = col + 1; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class t = piv * m[i][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        } else {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = piv * m[i][j] - m[i][col] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
            m[i][col] = 0;
        }
    }
}

} // namespace

mpz_class bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw ValidationError("determinant of non-square matrix");

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        if (k + 1 < n) eliminate_below(m, k, k, prev);
        prev = m[k][k];
    }
    return sign > 0 ? prev : mpz_class(-prev);
}

long long bareiss_rank(IntMatrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw ValidationError("ragged matrix");

    long long rank = 0;
    mpz_class prev = 1;
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols && k < m.size(); ++col) {
        std::size_t best = m.size();
        std::size_t best_w = 0;
        for (std::size_t i = k; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            std::size_t w = row_weight(m[i], col);
            if (best == m.size() || w < best_w) {
                best = i;
                best_w = w;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[best], m[k]);
        eliminate_below(m, k, col, prev);
        prev = m[k][col];
        ++k;
        ++rank;
    }
    return rank;
}

std::vector<mpq_class> solve_linear(RatMatrix a, std::vector<mpq_class> b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw ValidationError("solve_linear: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw ValidationError("solve_linear: non-square matrix");

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw ValidationError("solve_linear: singular matrix");
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        mpq_class inv = 1 / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;
        b[k] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            mpq_class f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    return b;
}

} // namespace zonodt
