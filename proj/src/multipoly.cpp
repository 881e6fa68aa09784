#include "zonodt/multipoly.hpp"

#include <numeric>
#include <string>

#include "zonodt/errors.hpp"

namespace zonodt {

MultiPoly MultiPoly::constant(int nvars, const mpq_class& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw ValidationError("variable index " + std::to_string(index) + " out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<mpq_class>& coeffs) {
    MultiPoly p(static_cast<int>(coeffs.size()));
    Exponents e(coeffs.size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        e[i] = 1;
        p.add_term(e, coeffs[i]);
        e[i] = 0;
    }
    return p;
}

long long MultiPoly::degree() const {
    long long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long long>(std::accumulate(e.begin(), e.end(), 0)));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    long long d = -1;
    for (const auto& [e, c] : terms_) {
        const long long t = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1) d = t;
        if (t != d) return false;
    }
    return true;
}

mpq_class MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const mpq_class& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != n_)
        throw ValidationError("exponent vector length does not match variable count");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (n_ != o.n_) throw ValidationError("polynomial variable counts differ");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (n_ != o.n_) throw ValidationError("polynomial variable counts differ");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (n_ != o.n_) throw ValidationError("polynomial variable counts differ");
    MultiPoly r(n_);
    Exponents e(n_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const mpq_class& c) const {
    MultiPoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw ValidationError("negative polynomial power");
    MultiPoly r = constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::permuted(const Perm& sigma) const {
    if (static_cast<int>(sigma.size()) != n_)
        throw ValidationError("permutation degree does not match variable count");
    MultiPoly r(n_);
    Exponents img(n_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < n_; ++i) img[sigma[i]] = e[i];
        r.add_term(img, c);
    }
    return r;
}

mpq_class MultiPoly::evaluate(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != n_)
        throw ValidationError("evaluation point length does not match variable count");
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

MultiPoly apply_operator(const MultiPoly& p, const MultiPoly& g) {
    if (p.nvars() != g.nvars()) throw ValidationError("polynomial variable counts differ");
    const int n = p.nvars();
    MultiPoly result(n);
    MultiPoly::Exponents shifted(n);
    for (const auto& [pe, pc] : p.terms()) {
        for (const auto& [ge, gc] : g.terms()) {
            mpz_class falling = 1;
            bool alive = true;
            for (int i = 0; i < n && alive; ++i) {
                if (ge[i] < pe[i]) {
                    alive = false;
                    break;
                }
                for (int k = 0; k < pe[i]; ++k) falling *= ge[i] - k;
                shifted[i] = ge[i] - pe[i];
            }
            if (!alive) continue;
            result.add_term(shifted, pc * gc * mpq_class(falling));
        }
    }
    return result;
}

MultiPoly directional_derivative(const MultiPoly& f, uint32_t mask) {
    const int n = f.nvars();
    MultiPoly result(n);
    MultiPoly::Exponents shifted(n);
    for (const auto& [e, c] : f.terms()) {
        for (uint32_t m = mask; m; m &= m - 1) {
            const int i = __builtin_ctz(m);
            if (i >= n) break;
            if (e[i] == 0) continue;
            shifted = e;
            shifted[i] -= 1;
            result.add_term(shifted, c * e[i]);
        }
    }
    return result;
}

} // namespace zonodt
