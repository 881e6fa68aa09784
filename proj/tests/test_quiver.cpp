#include <doctest.h>

#include "zonodt/errors.hpp"
#include "zonodt/quiver.hpp"

using namespace zonodt;

TEST_CASE("quiver construction") {
    CHECK_THROWS_AS(SymmetricQuiver({}), ValidationError);
    CHECK_THROWS_AS(SymmetricQuiver({{1, 2}}), ValidationError);
    CHECK_THROWS_AS(SymmetricQuiver({{1, 2}, {3, 1}}), ValidationError);
    CHECK_THROWS_AS(SymmetricQuiver({{0}}), ValidationError);
    CHECK_THROWS_AS(SymmetricQuiver({{1, -1}, {-1, 1}}), ValidationError);

    const SymmetricQuiver q({{2, 1}, {1, 3}});
    CHECK(q.num_vertices() == 2);
    CHECK(q.arrows(0, 1) == 1);
    CHECK(q.arrows(1, 1) == 3);
}

TEST_CASE("dimension vector validation") {
    const SymmetricQuiver q({{2}});
    CHECK_THROWS_AS(covering_graph(q, {}), ValidationError);
    CHECK_THROWS_AS(covering_graph(q, {1, 1}), ValidationError);
    CHECK_THROWS_AS(covering_graph(q, {0}), ValidationError);
    CHECK_THROWS_AS(n_gamma(q, {-2}), ValidationError);
}

TEST_CASE("covering graph of the bipartite quiver") {
    // One arrow each way between two loop vertices, gamma = (2, 3): the cover
    // is the complete bipartite graph on 2 + 3 vertices.
    const SymmetricQuiver q({{1, 1}, {1, 1}});
    const DimensionVector gamma{2, 3};
    const CoveringGraph cov = covering_graph(q, gamma);
    CHECK(cov.graph.num_vertices() == 5);
    CHECK(cov.graph.edge_count() == 6);
    CHECK(cov.block_sizes == std::vector<int>{2, 3});
    CHECK(cov.graph.multiplicity(0, 1) == 0);  // inside the first block
    CHECK(cov.graph.multiplicity(2, 3) == 0);  // inside the second block
    CHECK(cov.graph.multiplicity(0, 2) == 1);
    CHECK(cov.graph.genus() == 2);

    CHECK(euler_form(q, gamma, gamma) == -12);
    CHECK(n_gamma(q, gamma) == 3);
    CHECK(n_gamma(q, gamma) == cov.graph.genus() + 1);
}

TEST_CASE("covering graph of the multi-loop vertex") {
    const SymmetricQuiver q({{4}});
    const CoveringGraph cov = covering_graph(q, {4});
    CHECK(cov.graph.num_vertices() == 4);
    CHECK(cov.graph.pair_count() == 6);
    for (const Edge& e : cov.graph.edges()) CHECK(e.mult == 3);
    CHECK(cov.graph.genus() == 15);
    CHECK(n_gamma(q, {4}) == 16);
    CHECK(n_gamma(q, {4}) == cov.graph.genus() + 1);
}

TEST_CASE("degenerate and disconnected covers") {
    // gamma_i = 1 everywhere gives the underlying simple graph.
    const SymmetricQuiver tri({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    const CoveringGraph cov = covering_graph(tri, {1, 1, 1});
    CHECK(cov.graph.num_vertices() == 3);
    CHECK(cov.graph.edge_count() == 3);

    // A single-loop vertex blown up to two vertices has no internal edges.
    CHECK_THROWS_WITH_AS(covering_graph(SymmetricQuiver({{1}}), {2}),
                         doctest::Contains("splits internally"), ValidationError);

    // No arrows between the two vertices.
    const SymmetricQuiver split({{2, 0}, {0, 2}});
    CHECK_THROWS_WITH_AS(covering_graph(split, {2, 2}), doctest::Contains("disconnected"),
                         ValidationError);

    // One vertex, gamma = 1: a single point is connected.
    const CoveringGraph point = covering_graph(SymmetricQuiver({{1}}), {1});
    CHECK(point.graph.num_vertices() == 1);
    CHECK(point.graph.genus() == 0);
}

TEST_CASE("plus_one_loop") {
    const SymmetricQuiver q({{1, 1}, {1, 1}});
    const SymmetricQuiver p = plus_one_loop(q);
    CHECK(p.arrows(0, 0) == 2);
    CHECK(p.arrows(1, 1) == 2);
    CHECK(p.arrows(0, 1) == 1);
}

TEST_CASE("euler form and grading") {
    const SymmetricQuiver q({{2, 1}, {1, 2}});
    CHECK(euler_form(q, {1, 1}, {1, 1}) == -4);
    CHECK(euler_form(q, {2, 1}, {1, 2}) == (2 + 2) - (2 * 2 * 1 + 1 * 2 * 2 + 1 * 1 * 1 + 2 * 1 * 2));

    const SymmetricQuiver bip({{1, 1}, {1, 1}});
    CHECK(grading_shift(bip, {2, 3}, 0) == -12);
    CHECK(grading_shift(bip, {2, 3}, 5) == -2);
    CHECK_THROWS_AS(grading_shift(bip, {2, 3}, -1), ValidationError);
}
