#include "zonodt/corpus.hpp"

namespace zonodt {

namespace {

Multigraph complete(int n, int mult) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, mult});
    return Multigraph(n, edges);
}

Multigraph path(int n, int mult = 1) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, mult});
    return Multigraph(n, edges);
}

Multigraph cycle(int n, int mult = 1) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, mult});
    edges.push_back({0, n - 1, mult});
    return Multigraph(n, edges);
}

Multigraph star(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v, 1});
    return Multigraph(n, edges);
}

Multigraph complete_bipartite(int a, int b, int mult = 1) {
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.push_back({u, v, mult});
    return Multigraph(a + b, edges);
}

std::vector<CorpusGraph> build_graphs() {
    std::vector<CorpusGraph> list;
    const auto add = [&](const std::string& name, Multigraph g) {
        list.push_back({name, std::move(g)});
    };

    add("edge", complete(2, 1));
    add("double-edge", complete(2, 2));
    add("quintuple-edge", complete(2, 5));
    add("twelvefold-edge", complete(2, 12));

    add("path-3", path(3));
    add("path-3-heavy-end", Multigraph(3, {{0, 1, 2}, {1, 2, 1}}));
    add("triangle", complete(3, 1));
    add("theta", Multigraph(3, {{0, 1, 2}, {1, 2, 1}, {0, 2, 1}}));
    add("triangle-double", complete(3, 2));
    add("triangle-triple", complete(3, 3));
    add("triangle-quadruple", complete(3, 4));

    add("path-4", path(4));
    add("star-4", star(4));
    add("cycle-4", cycle(4));
    add("paw", Multigraph(4, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}}));
    add("diamond", Multigraph(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}}));
    add("complete-4", complete(4, 1));
    add("complete-4-doubled-edge",
        Multigraph(4, {{0, 1, 2}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}));
    add("cycle-4-opposite-doubled",
        Multigraph(4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {0, 3, 1}}));
    add("cycle-4-double", cycle(4, 2));
    add("complete-4-double", complete(4, 2));

    add("path-5", path(5));
    add("star-5", star(5));
    add("spider", Multigraph(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {3, 4, 1}}));
    add("cycle-5", cycle(5));
    add("cycle-5-chord",
        Multigraph(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {0, 4, 1}, {0, 2, 1}}));
    add("bowtie",
        Multigraph(5, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}}));
    add("complete-bipartite-2-3", complete_bipartite(2, 3));
    add("complete-bipartite-2-3-doubled-edge",
        Multigraph(5, {{0, 2, 2}, {0, 3, 1}, {0, 4, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}}));
    add("wheel-4", Multigraph(5, {{0, 1, 1},
                                  {0, 2, 1},
                                  {0, 3, 1},
                                  {0, 4, 1},
                                  {1, 2, 1},
                                  {2, 3, 1},
                                  {3, 4, 1},
                                  {1, 4, 1}}));

    add("path-6", path(6));
    add("star-6", star(6));
    add("caterpillar-6",
        Multigraph(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {2, 5, 1}}));
    add("cycle-6", cycle(6));

    return list;
}

std::vector<CorpusQuiver> build_quivers() {
    std::vector<CorpusQuiver> list;
    const auto add = [&](const std::string& name, std::vector<std::vector<long long>> m,
                         DimensionVector gamma) {
        list.push_back({name, SymmetricQuiver(std::move(m)), std::move(gamma)});
    };

    add("two-loop-gamma-2", {{2}}, {2});
    add("two-loop-gamma-3", {{2}}, {3});
    add("two-loop-gamma-4", {{2}}, {4});
    add("two-loop-gamma-5", {{2}}, {5});
    add("three-loop-gamma-3", {{3}}, {3});
    add("four-loop-gamma-3", {{4}}, {3});
    add("kronecker-2-gamma-2-2", {{1, 2}, {2, 1}}, {2, 2});
    add("bipartite-gamma-2-3", {{1, 1}, {1, 1}}, {2, 3});
    add("multipartite-1-gamma-2-2", {{2, 1}, {1, 2}}, {2, 2});
    add("multipartite-1-gamma-3-1", {{2, 1}, {1, 2}}, {3, 1});
    add("multipartite-2-gamma-2-2", {{3, 2}, {2, 3}}, {2, 2});
    add("multipartite-1-gamma-1-1-1", {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, {1, 1, 1});
    add("tripartite-gamma-2-1-1", {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, {2, 1, 1});
    add("mixed-gamma-1-2", {{1, 3}, {3, 2}}, {1, 2});

    return list;
}

} // namespace

const std::vector<CorpusGraph>& corpus_graphs() {
    static const std::vector<CorpusGraph> list = build_graphs();
    return list;
}

const std::vector<CorpusQuiver>& corpus_quivers() {
    static const std::vector<CorpusQuiver> list = build_quivers();
    return list;
}

} // namespace zonodt
