#include <doctest.h>

#include <cstdint>
#include <vector>

#include "zonodt/corpus.hpp"
#include "zonodt/multigraph.hpp"
#include "zonodt/tutte.hpp"

using namespace zonodt;

namespace {

// Independent oracle: the corank-nullity expansion
//   T(x, y) = sum over edge subsets A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))
// evaluated at a fixed integer point. Edges are expanded to individual copies,
// so this is exponential and only usable on tiny graphs.
mpz_class corank_nullity_eval(const Multigraph& g, long long x, long long y) {
    std::vector<std::pair<int, int>> copies;
    for (const Edge& e : g.edges())
        for (int k = 0; k < e.mult; ++k) copies.emplace_back(e.u, e.v);
    const int m = static_cast<int>(copies.size());
    const int n = g.num_vertices();
    REQUIRE(m <= 20);

    auto rank_of = [&](std::uint32_t mask) {
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        int rank = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1u)) continue;
            const int ra = find(copies[i].first), rb = find(copies[i].second);
            if (ra != rb) {
                parent[ra] = rb;
                ++rank;
            }
        }
        return rank;
    };

    const int full_rank = rank_of((m >= 32) ? 0xffffffffu : ((1u << m) - 1u));
    mpz_class total = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        const int r = rank_of(mask);
        const int popc = __builtin_popcount(mask);
        mpz_class term = 1;
        for (int i = 0; i < full_rank - r; ++i) term *= static_cast<long>(x - 1);
        for (int i = 0; i < popc - r; ++i) term *= static_cast<long>(y - 1);
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("small closed forms") {
    SUBCASE("single edge") {
        const TuttePoly t = tutte(Multigraph(2, {{0, 1, 1}}));
        CHECK(t.x_degree() == 1);
        CHECK(t.y_degree() == 0);
        CHECK(t.coeff(1, 0) == 1);
        CHECK(t.coeff(0, 0) == 0);
    }
    SUBCASE("parallel edges: x + y + ... + y^(m-1)") {
        const TuttePoly t = tutte(Multigraph(2, {{0, 1, 4}}));
        CHECK(t.coeff(1, 0) == 1);
        for (int j = 1; j <= 3; ++j) CHECK(t.coeff(0, j) == 1);
        CHECK(t.y_degree() == 3);
        CHECK(t.tree_count() == 4);
    }
    SUBCASE("triangle: x^2 + x + y") {
        const TuttePoly t = tutte(Multigraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}));
        CHECK(t.coeff(2, 0) == 1);
        CHECK(t.coeff(1, 0) == 1);
        CHECK(t.coeff(0, 1) == 1);
        CHECK(t.x_degree() == 2);
        CHECK(t.y_degree() == 1);
    }
    SUBCASE("tree: x^(n-1)") {
        const TuttePoly t = tutte(Multigraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}));
        CHECK(t == TuttePoly::x_power(3));
    }
}

TEST_CASE("matches the corank-nullity expansion at integer points") {
    const long points[][2] = {{1, 1}, {2, 1}, {1, 2}, {0, 1}, {1, 0}, {2, 2}, {3, 2}, {-1, -1}};
    for (const CorpusGraph& entry : corpus_graphs()) {
        if (entry.graph.edge_count() > 10) continue;
        const TuttePoly t = tutte(entry.graph);
        for (const auto& p : points) {
            CAPTURE(entry.name);
            CAPTURE(p[0]);
            CAPTURE(p[1]);
            CHECK(t.eval(p[0], p[1]) == corank_nullity_eval(entry.graph, p[0], p[1]));
        }
    }
}

TEST_CASE("tree count agrees with the matrix-tree theorem") {
    for (const CorpusGraph& entry : corpus_graphs()) {
        CAPTURE(entry.name);
        CHECK(tutte(entry.graph).tree_count() == spanning_tree_count(entry.graph));
    }
}

TEST_CASE("central hilbert series from T(1, 1/q)") {
    const Multigraph diamond(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
    const TuttePoly t = tutte(diamond);
    const auto h = t.central_hilbert(diamond.genus());
    REQUIRE(h.size() == 3);
    CHECK(h[0] == 1);
    CHECK(h[1] == 3);
    CHECK(h[2] == 4);

    const Multigraph triangle(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
    const auto h3 = tutte(triangle).central_hilbert(1);
    CHECK(h3 == std::vector<mpz_class>{1, 2});

    // Degree-0 case: trees concentrate everything in q^0.
    const auto ht = tutte(Multigraph(2, {{0, 1, 1}})).central_hilbert(0);
    CHECK(ht == std::vector<mpz_class>{1});
}

TEST_CASE("memoized recomputation is identical") {
    const Multigraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    const TuttePoly a = tutte(k4);
    tutte_memo_clear();
    const TuttePoly b = tutte(k4);
    CHECK(a == b);
    CHECK(a.eval(2, 2) == 64);   // 2^|E|
    CHECK(a.eval(1, 2) == 38);   // spanning connected subgraphs
    CHECK(a.eval(2, 1) == 38);   // forests
    CHECK(a.tree_count() == 16);
}
