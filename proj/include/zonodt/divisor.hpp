#ifndef ZONODT_DIVISOR_HPP
#define ZONODT_DIVISOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "zonodt/caps.hpp"
#include "zonodt/multigraph.hpp"
#include "zonodt/perm_group.hpp"
#include "zonodt/quiver.hpp"

namespace zonodt {

// Integer chip counts per vertex.
using Divisor = std::vector<long long>;

// Effective divisors of degree g(G) whose restriction to every connected
// induced subgraph G[S] has degree at least g(G[S]). Output is sorted
// lexicographically and duplicate-free.
std::vector<Divisor> enumerate_break_divisors(const Multigraph& g,
                                              long long max_edges = kMaxBreakEdgesDefault);
std::vector<Divisor> enumerate_break_divisors_serial(
    const Multigraph& g, long long max_edges = kMaxBreakEdgesDefault);

// All divisors reachable from a spanning tree by assigning each non-tree edge
// to one of its endpoints.
std::vector<Divisor> tree_chip_divisors(const Multigraph& g,
                                        const std::vector<std::pair<int, int>>& tree_edges);

// Indegree-minus-one vectors over all 2^|E| edge orientations.
std::vector<Divisor> enumerate_orientable_divisors(const Multigraph& g,
                                                   long long max_edges = kMaxEdgesDefault);
std::vector<Divisor> enumerate_orientable_divisors_serial(const Multigraph& g,
                                                          long long max_edges = kMaxEdgesDefault);

// Orientable divisors p with e(S)-|S| < x_S(p) < e(S)-|S|+d(S) strictly, for
// every nonempty proper vertex subset S.
std::vector<Divisor> interior_orientable_divisors(const Multigraph& g,
                                                  long long max_edges = kMaxEdgesDefault);

struct OrbitInfo {
    Divisor rep;                 // lexicographically largest point of the orbit
    long long size = 0;
    std::vector<long long> stab_type;  // multiplicity partition of rep values;
                                       // filled only under the full symmetric group
};

struct OrbitReport {
    std::vector<OrbitInfo> orbits;  // sorted by rep, lexicographically decreasing
};

OrbitReport orbits(const std::vector<Divisor>& points, const PermGroup& grp);

// Number of Young-subgroup orbits of break divisors on the covering graph.
long long numerical_dt(const SymmetricQuiver& q, const DimensionVector& gamma);

struct CheckReport {
    bool pass = true;
    long long checks = 0;
    std::string detail;  // first counterexample when failing
};

// For every bond side S: values of x_S on break divisors fill the integer
// interval [g(G[S]), g(G)-g(G[Sbar])] exactly, the interval interpolant
// vanishes on every break divisor, and every break divisor has degree g(G).
CheckReport check_break_vanishing(const Multigraph& g);

// For every nonempty proper S: values of x_S on orientable divisors fill
// [e(S)-|S|, e(S)-|S|+d(S)] exactly; on interior divisors they avoid both
// endpoints; degrees are g(G)-1 throughout.
CheckReport check_orientable_vanishing(const Multigraph& g,
                                       long long max_edges = kMaxEdgesDefault);

// Vectors a >= 0 on V minus the root such that every nonempty S avoiding the
// root has a vertex i with a_i strictly below the number of edges from i out
// of S. Sorted lexicographically; coordinates follow increasing vertex order.
std::vector<std::vector<long long>> g_parking_functions(const Multigraph& g, int root);

} // namespace zonodt

#endif
