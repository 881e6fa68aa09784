#ifndef ZONODT_QUIVER_HPP
#define ZONODT_QUIVER_HPP

#include <initializer_list>
#include <vector>

#include "zonodt/multigraph.hpp"

namespace zonodt {

// Symmetric quiver with at least one loop at every vertex: a[i][j] counts the
// arrows between i and j (loops on the diagonal).
class SymmetricQuiver {
public:
    explicit SymmetricQuiver(std::vector<std::vector<long long>> a);
    SymmetricQuiver(std::initializer_list<std::vector<long long>> rows)
        : SymmetricQuiver(std::vector<std::vector<long long>>(rows)) {}

    int num_vertices() const { return static_cast<int>(a_.size()); }
    long long arrows(int i, int j) const { return a_[i][j]; }
    const std::vector<std::vector<long long>>& matrix() const { return a_; }

private:
    std::vector<std::vector<long long>> a_;
};

// Dimension vector: one positive entry per quiver vertex.
using DimensionVector = std::vector<long long>;

struct CoveringGraph {
    Multigraph graph;
    std::vector<int> block_sizes;
};

// Blow each quiver vertex i up into a block of gamma_i vertices: within block
// i every pair carries a_ii - 1 parallel edges, across blocks i != j every
// pair carries a_ij. Throws if the result is disconnected.
CoveringGraph covering_graph(const SymmetricQuiver& q, const DimensionVector& gamma);

// Adds one loop at every vertex; off-diagonal entries unchanged.
SymmetricQuiver plus_one_loop(const SymmetricQuiver& q);

// sum_i gamma_i delta_i - sum_{i,j} a_ij gamma_i delta_j
long long euler_form(const SymmetricQuiver& q, const DimensionVector& gamma,
                     const DimensionVector& delta);

// (sum_{i != j} a_ij gamma_i gamma_j + sum_i (a_ii - 1) gamma_i (gamma_i - 1)) / 2
//   - sum_i gamma_i + 2
long long n_gamma(const SymmetricQuiver& q, const DimensionVector& gamma);

// Degree d of a polynomial grades as 2d + euler_form(q, gamma, gamma).
long long grading_shift(const SymmetricQuiver& q, const DimensionVector& gamma, long long d);

} // namespace zonodt

#endif
