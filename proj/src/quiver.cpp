#include "zonodt/quiver.hpp"

#include <string>

#include "zonodt/errors.hpp"

namespace zonodt {

SymmetricQuiver::SymmetricQuiver(std::vector<std::vector<long long>> a) : a_(std::move(a)) {
    const std::size_t k = a_.size();
    if (k == 0) throw ValidationError("quiver: matrix is empty");
    for (std::size_t i = 0; i < k; ++i) {
        if (a_[i].size() != k)
            throw ValidationError("quiver: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(a_[i].size()) + " entries, expected " +
                                  std::to_string(k));
        for (std::size_t j = 0; j < k; ++j) {
            if (a_[i][j] < 0 || a_[i][j] > 1000000)
                throw ValidationError("quiver: arrow count out of range at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (a_[i][j] != a_[j][i])
                throw ValidationError("quiver: matrix not symmetric at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    for (std::size_t i = 0; i < k; ++i)
        if (a_[i][i] < 1)
            throw ValidationError("quiver: vertex " + std::to_string(i + 1) +
                                  " has no loop (a_ii must be at least 1)");
}

namespace {

void check_gamma(const SymmetricQuiver& q, const DimensionVector& gamma) {
    if (static_cast<int>(gamma.size()) != q.num_vertices())
        throw ValidationError("dimension vector has " + std::to_string(gamma.size()) +
                              " entries, quiver has " + std::to_string(q.num_vertices()) +
                              " vertices");
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i] < 1)
            throw ValidationError("dimension vector entry " + std::to_string(i + 1) +
                                  " must be positive (delete the quiver vertex instead)");
}

} // namespace

CoveringGraph covering_graph(const SymmetricQuiver& q, const DimensionVector& gamma) {
    check_gamma(q, gamma);
    const int k = q.num_vertices();
    std::vector<int> offset(k + 1, 0);
    for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + static_cast<int>(gamma[i]);
    const int n = offset[k];

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        const int intra = static_cast<int>(q.arrows(i, i)) - 1;
        if (intra > 0)
            for (int a = offset[i]; a < offset[i + 1]; ++a)
                for (int b = a + 1; b < offset[i + 1]; ++b) edges.push_back({a, b, intra});
        for (int j = i + 1; j < k; ++j) {
            const int cross = static_cast<int>(q.arrows(i, j));
            if (cross > 0)
                for (int a = offset[i]; a < offset[i + 1]; ++a)
                    for (int b = offset[j]; b < offset[j + 1]; ++b) edges.push_back({a, b, cross});
        }
    }

    Multigraph g(n, edges);
    if (!g.is_connected()) {
        std::vector<char> reach(n, 0);
        reach[0] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Edge& e : g.edges()) {
                if (reach[e.u] != reach[e.v]) {
                    reach[e.u] = reach[e.v] = 1;
                    grew = true;
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            bool any_in = false, any_out = false;
            for (int v = offset[i]; v < offset[i + 1]; ++v) (reach[v] ? any_in : any_out) = true;
            if (any_in && any_out)
                throw ValidationError("covering graph is disconnected: block " +
                                      std::to_string(i + 1) +
                                      " splits internally (a_ii = 1 gives it no edges)");
        }
        std::string inside, outside;
        for (int i = 0; i < k; ++i) {
            std::string& side = reach[offset[i]] ? inside : outside;
            if (!side.empty()) side += ",";
            side += std::to_string(i + 1);
        }
        throw ValidationError("covering graph is disconnected: no edges join blocks {" + inside +
                              "} to blocks {" + outside + "}");
    }

    std::vector<int> blocks;
    for (long long gi : gamma) blocks.push_back(static_cast<int>(gi));
    return CoveringGraph{std::move(g), std::move(blocks)};
}

SymmetricQuiver plus_one_loop(const SymmetricQuiver& q) {
    auto a = q.matrix();
    for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += 1;
    return SymmetricQuiver(std::move(a));
}

long long euler_form(const SymmetricQuiver& q, const DimensionVector& gamma,
                     const DimensionVector& delta) {
    check_gamma(q, gamma);
    check_gamma(q, delta);
    long long total = 0;
    const int k = q.num_vertices();
    for (int i = 0; i < k; ++i) total += gamma[i] * delta[i];
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) total -= q.arrows(i, j) * gamma[i] * delta[j];
    return total;
}

long long n_gamma(const SymmetricQuiver& q, const DimensionVector& gamma) {
    check_gamma(q, gamma);
    const int k = q.num_vertices();
    long long twice = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j)
                twice += (q.arrows(i, i) - 1) * gamma[i] * (gamma[i] - 1);
            else
                twice += q.arrows(i, j) * gamma[i] * gamma[j];
        }
    long long total = twice / 2 + 2;
    for (int i = 0; i < k; ++i) total -= gamma[i];
    return total;
}

long long grading_shift(const SymmetricQuiver& q, const DimensionVector& gamma, long long d) {
    if (d < 0) throw ValidationError("grading_shift: degree must be nonnegative");
    return 2 * d + euler_form(q, gamma, gamma);
}

} // namespace zonodt
