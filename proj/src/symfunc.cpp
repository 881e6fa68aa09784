#include "zonodt/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zonodt/divisor.hpp"
#include "zonodt/errors.hpp"
#include "zonodt/linalg.hpp"
#include "zonodt/perm_group.hpp"

namespace zonodt {

namespace {

long long uniform_complete_multiplicity(const Multigraph& g) {
    const int n = g.num_vertices();
    if (n < 2)
        throw ValidationError("complete graph check: need at least two vertices");
    if (g.pair_count() != n * (n - 1) / 2)
        throw ValidationError("graph is not a complete graph: some vertex pair has no edge");
    const long long m = g.edges().front().mult;
    for (const Edge& e : g.edges())
        if (e.mult != m)
            throw ValidationError("graph does not have uniform edge multiplicity");
    return m;
}

void validate_basis(char b) {
    if (b != 'h' && b != 'm' && b != 's')
        throw ValidationError(std::string("unknown symmetric function basis '") + b + "'");
}

Partition strip_zeros(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

mpz_class kostka_rec(const Partition& lambda, const Partition& mu,
                     std::map<std::pair<Partition, Partition>, mpz_class>& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Peel the last content entry as a horizontal strip.
    const long long strip = mu.back();
    Partition rest(mu.begin(), mu.end() - 1);
    const long long target = partition_weight(lambda) - strip;

    mpz_class total = 0;
    Partition nu(lambda.size(), 0);
    std::function<void(std::size_t, long long)> choose = [&](std::size_t i, long long sum) {
        if (sum > target) return;
        if (i == lambda.size()) {
            if (sum == target) total += kostka_rec(strip_zeros(nu), rest, memo);
            return;
        }
        const long long lo = i + 1 < lambda.size() ? lambda[i + 1] : 0;
        for (long long v = lambda[i]; v >= lo; --v) {
            nu[i] = v;
            choose(i + 1, sum + v);
        }
    };
    choose(0, 0);
    memo[key] = total;
    return total;
}

} // namespace

mpz_class kostka(const Partition& lambda, const Partition& mu) {
    validate_partition(lambda);
    validate_partition(mu);
    if (partition_weight(lambda) != partition_weight(mu))
        throw ValidationError("kostka: partitions must have the same size");
    std::map<std::pair<Partition, Partition>, mpz_class> memo;
    return kostka_rec(lambda, mu, memo);
}

SymFunc frobenius_h(const Multigraph& g) {
    uniform_complete_multiplicity(g);
    const int n = g.num_vertices();
    const auto breaks = enumerate_break_divisors(g);
    const OrbitReport report = orbits(breaks, young_subgroup({n}));

    SymFunc f;
    f.basis = 'h';
    for (const OrbitInfo& orbit : report.orbits) f.coeffs[orbit.stab_type] += 1;
    return f;
}

SymFunc convert(const SymFunc& f, char target) {
    validate_basis(f.basis);
    validate_basis(target);
    if (f.coeffs.empty() || f.basis == target) {
        SymFunc out = f;
        out.basis = target;
        return out;
    }

    const long long n = partition_weight(f.coeffs.begin()->first);
    for (const auto& [p, c] : f.coeffs) {
        validate_partition(p);
        if (partition_weight(p) != n)
            throw ValidationError("symmetric function is not homogeneous");
    }
    if (n > 10) throw CapExceeded("basis conversion supports degree at most 10");

    const auto parts = partitions_of(n);
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], i);

    std::map<std::pair<Partition, Partition>, mpz_class> memo;
    const auto K = [&](const Partition& lam, const Partition& mu) {
        return kostka_rec(lam, mu, memo);
    };

    // Row i of the matrix for basis b expands b_{parts[i]} in the m-basis.
    const auto to_m_matrix = [&](char b) {
        RatMatrix mat(parts.size(), std::vector<mpq_class>(parts.size(), 0));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (b == 'm') {
                    mat[i][k] = i == k ? 1 : 0;
                } else if (b == 's') {
                    mat[i][k] = mpq_class(K(parts[i], parts[k]));
                } else {
                    mpz_class sum = 0;
                    for (const auto& lam : parts) sum += K(lam, parts[i]) * K(lam, parts[k]);
                    mat[i][k] = mpq_class(sum);
                }
            }
        return mat;
    };

    std::vector<mpq_class> v(parts.size(), 0);
    for (const auto& [p, c] : f.coeffs) v[index.at(p)] = c;

    const RatMatrix source = to_m_matrix(f.basis);
    std::vector<mpq_class> w(parts.size(), 0);
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (std::size_t i = 0; i < parts.size(); ++i) w[k] += v[i] * source[i][k];

    std::vector<mpq_class> u;
    if (target == 'm') {
        u = std::move(w);
    } else {
        // Solve sum_j u_j T[j][k] = w_k.
        const RatMatrix t = to_m_matrix(target);
        RatMatrix sys(parts.size(), std::vector<mpq_class>(parts.size()));
        for (std::size_t k = 0; k < parts.size(); ++k)
            for (std::size_t j = 0; j < parts.size(); ++j) sys[k][j] = t[j][k];
        u = solve_linear(sys, w);
    }

    SymFunc out;
    out.basis = target;
    for (std::size_t j = 0; j < parts.size(); ++j)
        if (u[j] != 0) out.coeffs[parts[j]] = u[j];
    return out;
}

long long monomial_coefficient(const Multigraph& g, const Partition& lambda) {
    uniform_complete_multiplicity(g);
    validate_partition(lambda);
    if (partition_weight(lambda) != g.num_vertices())
        throw ValidationError("lambda must be a partition of the vertex count");

    std::vector<int> blocks(lambda.begin(), lambda.end());
    const auto breaks = enumerate_break_divisors(g);
    return static_cast<long long>(orbits(breaks, young_subgroup(blocks)).orbits.size());
}

} // namespace zonodt
