#ifndef ZONODT_MULTIGRAPH_HPP
#define ZONODT_MULTIGRAPH_HPP

#include <cstdint>
#include <vector>
#include <gmpxx.h>

namespace zonodt {

// One parallel-edge class. Vertices are 0-based internally; JSON I/O is 1-based.
struct Edge {
    int u;
    int v;
    int mult;
};

// Immutable loop-free multigraph. Edge classes are kept sorted by (u, v) with
// u < v and positive multiplicity; duplicate pairs passed to the constructor are
// merged.
class Multigraph {
public:
    Multigraph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int pair_count() const { return static_cast<int>(edges_.size()); }
    long long edge_count() const;                 // with multiplicity
    int multiplicity(int u, int v) const;         // 0 if absent
    long long degree(int v) const;
    bool is_connected() const;
    long long genus() const;                      // |E| - |V| + 1, connected input

    // Vertex-subset helpers over bitmasks (bit i = vertex i). Require n <= 30.
    long long edges_within(std::uint32_t mask) const;
    long long cut_size(std::uint32_t mask) const;
    bool connected_within(std::uint32_t mask) const;

private:
    int n_;
    std::vector<Edge> edges_;
};

struct InducedSubgraph {
    Multigraph graph;
    std::vector<int> labels;  // new vertex i was labels[i] in the parent
};

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<int>& verts);

struct Bond {
    std::vector<int> side;    // canonical side: the one containing vertex 0
    std::uint32_t side_mask;
    long long cut_size;
};

// All bonds, one per {S, complement} pair, canonical side listed.
std::vector<Bond> enumerate_bonds(const Multigraph& g);

// Nonempty vertex subsets S with G[S] connected, as bitmasks in increasing order.
std::vector<std::uint32_t> connected_vertex_subsets(const Multigraph& g);

// Matrix-tree count via an exact reduced-Laplacian determinant.
mpz_class spanning_tree_count(const Multigraph& g);

// Spanning trees as sets of n-1 vertex pairs (parallel copies not distinguished).
std::vector<std::vector<std::pair<int, int>>> enumerate_spanning_trees(const Multigraph& g);

} // namespace zonodt

#endif
