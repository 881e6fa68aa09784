#include "zonodt/multigraph.hpp"
#include "zonodt/errors.hpp"
#include "zonodt/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace zonodt {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void require_connected(const Multigraph& g, const char* op) {
    if (!g.is_connected())
        throw ValidationError(std::string(op) + ": graph is not connected");
}

void require_mask_support(const Multigraph& g) {
    if (g.num_vertices() > 30)
        throw CapExceeded("vertex-subset enumeration limited to 30 vertices");
}

} // namespace

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n) {
    if (n <= 0) throw ValidationError("vertex count must be positive");
    std::map<std::pair<int, int>, long long> acc;
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw ValidationError("self-loop at vertex " + std::to_string(e.u + 1));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw ValidationError("edge endpoint out of range");
        if (e.mult <= 0)
            throw ValidationError("edge multiplicity must be positive");
        int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
        acc[{a, b}] += e.mult;
    }
    edges_.reserve(acc.size());
    for (const auto& [pair, m] : acc) {
        if (m > 1000000) throw ValidationError("edge multiplicity out of range");
        edges_.push_back({pair.first, pair.second, static_cast<int>(m)});
    }
}

long long Multigraph::edge_count() const {
    long long total = 0;
    for (const Edge& e : edges_) total += e.mult;
    return total;
}

int Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const Edge& e : edges_)
        if (e.u == u && e.v == v) return e.mult;
    return 0;
}

long long Multigraph::degree(int v) const {
    long long d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) d += e.mult;
    return d;
}

bool Multigraph::is_connected() const {
    UnionFind uf(n_);
    int comps = n_;
    for (const Edge& e : edges_)
        if (uf.unite(e.u, e.v)) --comps;
    return comps == 1;
}

long long Multigraph::genus() const {
    require_connected(*this, "genus");
    return edge_count() - n_ + 1;
}

long long Multigraph::edges_within(std::uint32_t mask) const {
    require_mask_support(*this);
    long long total = 0;
    for (const Edge& e : edges_)
        if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) total += e.mult;
    return total;
}

long long Multigraph::cut_size(std::uint32_t mask) const {
    require_mask_support(*this);
    long long total = 0;
    for (const Edge& e : edges_)
        if ((mask >> e.u & 1u) != (mask >> e.v & 1u)) total += e.mult;
    return total;
}

bool Multigraph::connected_within(std::uint32_t mask) const {
    require_mask_support(*this);
    if (mask == 0) return false;
    UnionFind uf(n_);
    int comps = __builtin_popcount(mask);
    for (const Edge& e : edges_)
        if ((mask >> e.u & 1u) && (mask >> e.v & 1u) && uf.unite(e.u, e.v)) --comps;
    return comps == 1;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const std::vector<int>& verts) {
    if (verts.empty()) throw ValidationError("induced_subgraph: empty vertex set");
    std::vector<int> labels(verts);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw ValidationError("induced_subgraph: repeated vertex");
    if (labels.front() < 0 || labels.back() >= g.num_vertices())
        throw ValidationError("induced_subgraph: vertex out of range");

    std::vector<int> pos(g.num_vertices(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0)
            edges.push_back({pos[e.u], pos[e.v], e.mult});
    return {Multigraph(static_cast<int>(labels.size()), std::move(edges)), std::move(labels)};
}

std::vector<Bond> enumerate_bonds(const Multigraph& g) {
    require_connected(g, "enumerate_bonds");
    require_mask_support(g);
    const int n = g.num_vertices();
    const std::uint32_t full = (1u << n) - 1;

    std::vector<Bond> out;
    // Masks containing vertex 0 enumerate each {S, complement} pair once.
    for (std::uint32_t mask = 1; mask < full; mask += 2) {
        std::uint32_t comp = full & ~mask;
        if (comp == 0) continue;
        if (!g.connected_within(mask) || !g.connected_within(comp)) continue;
        Bond b;
        b.side_mask = mask;
        b.cut_size = g.cut_size(mask);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) b.side.push_back(v);
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<std::uint32_t> connected_vertex_subsets(const Multigraph& g) {
    require_mask_support(g);
    const int n = g.num_vertices();
    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (g.connected_within(mask)) out.push_back(mask);
    return out;
}

mpz_class spanning_tree_count(const Multigraph& g) {
    require_connected(g, "spanning_tree_count");
    const int n = g.num_vertices();
    if (n == 1) return 1;
    IntMatrix lap(n - 1, std::vector<mpz_class>(n - 1, 0));
    for (const Edge& e : g.edges()) {
        if (e.u < n - 1) lap[e.u][e.u] += e.mult;
        if (e.v < n - 1) lap[e.v][e.v] += e.mult;
        if (e.u < n - 1 && e.v < n - 1) {
            lap[e.u][e.v] -= e.mult;
            lap[e.v][e.u] -= e.mult;
        }
    }
    return bareiss_determinant(std::move(lap));
}

std::vector<std::vector<std::pair<int, int>>> enumerate_spanning_trees(const Multigraph& g) {
    require_connected(g, "enumerate_spanning_trees");
    const int n = g.num_vertices();
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    const int pairs = g.pair_count();
    std::vector<int> pick;
    std::vector<std::pair<int, int>> cur;

    // Choose n-1 pair indices in increasing order and keep the acyclic ones.
    auto rec = [&](auto&& self, int from, UnionFind uf) -> void {
        if (static_cast<int>(cur.size()) == n - 1) {
            out.push_back(cur);
            return;
        }
        int need = n - 1 - static_cast<int>(cur.size());
        for (int i = from; i + need <= pairs; ++i) {
            const Edge& e = g.edges()[i];
            UnionFind next = uf;
            if (!next.unite(e.u, e.v)) continue;
            cur.emplace_back(e.u, e.v);
            self(self, i + 1, next);
            cur.pop_back();
        }
    };
    rec(rec, 0, UnionFind(n));
    return out;
}

} // namespace zonodt
