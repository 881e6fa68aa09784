#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "zonodt/corpus.hpp"
#include "zonodt/divisor.hpp"
#include "zonodt/errors.hpp"
#include "zonodt/pspace.hpp"
#include "zonodt/tutte.hpp"

using namespace zonodt;

namespace {

// Independent oracle: enumerate every effective divisor of total degree g(G)
// directly and keep those satisfying the subgraph inequality, with its own
// edge counting (no Multigraph mask helpers).
std::vector<Divisor> break_divisors_oracle(const Multigraph& g) {
    const int n = g.num_vertices();
    const long long genus = g.genus();

    auto edges_inside = [&](const std::vector<int>& verts) {
        long long total = 0;
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b)
                total += g.multiplicity(verts[a], verts[b]);
        return total;
    };
    auto connected = [&](const std::vector<int>& verts) {
        std::vector<int> comp(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) comp[i] = static_cast<int>(i);
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t a = 0; a < verts.size(); ++a)
                for (std::size_t b = a + 1; b < verts.size(); ++b)
                    if (g.multiplicity(verts[a], verts[b]) > 0 && comp[a] != comp[b]) {
                        const int from = std::max(comp[a], comp[b]);
                        const int to = std::min(comp[a], comp[b]);
                        for (int& c : comp) c = (c == from) ? to : c;
                        grew = true;
                    }
        }
        return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
    };

    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) verts.push_back(i);
        if (connected(verts)) subsets.push_back(std::move(verts));
    }

    std::vector<Divisor> result;
    Divisor d(n, 0);
    auto rec = [&](auto&& self, int pos, long long remaining) -> void {
        if (pos == n - 1) {
            d[pos] = remaining;
            for (const auto& verts : subsets) {
                long long deg = 0;
                for (int v : verts) deg += d[v];
                const long long sub_genus =
                    edges_inside(verts) - static_cast<long long>(verts.size()) + 1;
                if (deg < sub_genus) return;
            }
            result.push_back(d);
            return;
        }
        for (long long c = 0; c <= remaining; ++c) {
            d[pos] = c;
            self(self, pos + 1, remaining - c);
        }
    };
    rec(rec, 0, genus);
    std::sort(result.begin(), result.end());
    return result;
}

Multigraph complete_bipartite_23() {
    return Multigraph(5, {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}});
}

}  // namespace

TEST_CASE("break divisors match the direct filter") {
    for (const CorpusGraph& entry : corpus_graphs()) {
        if (entry.graph.edge_count() > 9) continue;
        CAPTURE(entry.name);
        CHECK(enumerate_break_divisors(entry.graph) == break_divisors_oracle(entry.graph));
    }
}

TEST_CASE("break divisor count equals the spanning tree count") {
    for (const CorpusGraph& entry : corpus_graphs()) {
        CAPTURE(entry.name);
        const auto breaks = enumerate_break_divisors(entry.graph);
        CHECK(mpz_class(static_cast<long>(breaks.size())) == spanning_tree_count(entry.graph));
        CHECK(std::is_sorted(breaks.begin(), breaks.end()));
    }
}

TEST_CASE("trees have the single zero divisor") {
    const Multigraph star(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(enumerate_break_divisors(star) == std::vector<Divisor>{{0, 0, 0, 0}});
}

TEST_CASE("bipartite 2-3 break divisors and orbits") {
    const Multigraph g = complete_bipartite_23();
    const auto breaks = enumerate_break_divisors(g);
    CHECK(breaks.size() == 12);
    for (const Divisor& d : breaks) {
        long long deg = 0;
        for (long long c : d) deg += c;
        CHECK(deg == 2);
    }

    // Orbits under S_2 x S_3 on the two sides.
    const OrbitReport rep = orbits(breaks, young_subgroup({2, 3}));
    REQUIRE(rep.orbits.size() == 4);
    CHECK(rep.orbits[0].rep == Divisor{2, 0, 0, 0, 0});
    CHECK(rep.orbits[1].rep == Divisor{1, 1, 0, 0, 0});
    CHECK(rep.orbits[2].rep == Divisor{1, 0, 1, 0, 0});
    CHECK(rep.orbits[3].rep == Divisor{0, 0, 1, 1, 0});
    long long total = 0;
    for (const OrbitInfo& o : rep.orbits) total += o.size;
    CHECK(total == 12);
}

TEST_CASE("tree chip divisors cover the break set") {
    const Multigraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    const auto breaks = enumerate_break_divisors(k4);
    std::set<Divisor> seen;
    for (const auto& tree : enumerate_spanning_trees(k4)) {
        for (const Divisor& d : tree_chip_divisors(k4, tree)) {
            CHECK(std::binary_search(breaks.begin(), breaks.end(), d));
            seen.insert(d);
        }
    }
    CHECK(seen.size() == breaks.size());
}

TEST_CASE("orientable divisors") {
    SUBCASE("counts are Tutte evaluations") {
        for (const CorpusGraph& entry : corpus_graphs()) {
            if (entry.graph.edge_count() > 12) continue;
            CAPTURE(entry.name);
            const TuttePoly t = tutte(entry.graph);
            CHECK(mpz_class(static_cast<long>(
                      enumerate_orientable_divisors(entry.graph).size())) == t.eval(2, 1));
            CHECK(mpz_class(static_cast<long>(
                      interior_orientable_divisors(entry.graph).size())) == t.eval(0, 1));
        }
    }
    SUBCASE("four-cycle interior point") {
        const Multigraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
        CHECK(interior_orientable_divisors(c4) ==
              std::vector<Divisor>{{0, 0, 0, 0}});
        CHECK(enumerate_orientable_divisors(c4).size() == 15);  // T(2,1) for the 4-cycle
    }
    SUBCASE("trees have no interior points") {
        const Multigraph p3(3, {{0, 1, 1}, {1, 2, 1}});
        CHECK(interior_orientable_divisors(p3).empty());
        // 2^2 orientations, all collapse to degree vectors minus one.
        const auto ori = enumerate_orientable_divisors(p3);
        CHECK(ori.size() == 4);
    }
    SUBCASE("edge cap") {
        CHECK_THROWS_AS(enumerate_orientable_divisors(complete_bipartite_23(), 5), CapExceeded);
        CHECK_THROWS_AS(enumerate_break_divisors(complete_bipartite_23(), 5), CapExceeded);
    }
}

TEST_CASE("orbit handling rejects bad input") {
    const std::vector<Divisor> pts{{1, 0}, {0, 1}};
    CHECK_THROWS_AS(orbits({{1, 0}, {1, 0}}, young_subgroup({2})), ValidationError);
    CHECK_THROWS_AS(orbits({{1, 0}}, young_subgroup({2})), ValidationError);  // not closed
    CHECK_THROWS_AS(orbits({{1, 0, 0}}, young_subgroup({2})), ValidationError);

    const OrbitReport rep = orbits(pts, young_subgroup({2}));
    REQUIRE(rep.orbits.size() == 1);
    CHECK(rep.orbits[0].rep == Divisor{1, 0});
    CHECK(rep.orbits[0].size == 2);
    CHECK(rep.orbits[0].stab_type == std::vector<long long>{1, 1});
}

TEST_CASE("stabilizer types under the full symmetric group") {
    const Multigraph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    const auto breaks = enumerate_break_divisors(k4);
    const OrbitReport rep = orbits(breaks, young_subgroup({4}));
    long long total = 0;
    std::map<std::vector<long long>, int> types;
    for (const OrbitInfo& o : rep.orbits) {
        total += o.size;
        types[o.stab_type] += 1;
    }
    CHECK(total == 16);
    // 16 break divisors of degree 3 on K4: permutations of (2,1,0,0) and
    // (1,1,1,0). The pattern (3,0,0,0) fails on the complementary triangle.
    REQUIRE(rep.orbits.size() == 2);
    CHECK(types[{2, 1, 1}] == 1);  // values 2,1,0,0 -> multiplicities 2,1,1
    CHECK(types[{3, 1}] == 1);     // values 1,1,1,0 -> multiplicities 3,1
    CHECK(rep.orbits[0].rep == Divisor{2, 1, 0, 0});
    CHECK(rep.orbits[0].size == 12);
    CHECK(rep.orbits[1].rep == Divisor{1, 1, 1, 0});
    CHECK(rep.orbits[1].size == 4);
}

TEST_CASE("numerical invariants of small quivers") {
    SUBCASE("bipartite quiver") {
        const SymmetricQuiver q({{1, 1}, {1, 1}});
        CHECK(numerical_dt(q, {2, 3}) == 4);
        CHECK(numerical_dt(q, {1, 1}) == 1);
    }
    SUBCASE("loop quivers") {
        const SymmetricQuiver two_loops({{2}});
        const long long expected[] = {1, 1, 2, 5};  // n = 2..5, covering is K_n
        for (long long n = 2; n <= 5; ++n) CHECK(numerical_dt(two_loops, {n}) == expected[n - 2]);
        const SymmetricQuiver three_loops({{3}});
        CHECK(numerical_dt(three_loops, {2}) == 1);
    }
    SUBCASE("trivial group when every block has size one") {
        const SymmetricQuiver q({{1, 2}, {2, 1}});
        // gamma = (1,1): covering graph is a doubled edge, genus 1, two break
        // divisors forming two singleton orbits.
        CHECK(numerical_dt(q, {1, 1}) == 2);
    }
}

TEST_CASE("break vanishing checks pass on the corpus") {
    for (const CorpusGraph& entry : corpus_graphs()) {
        if (entry.graph.edge_count() > 9) continue;
        CAPTURE(entry.name);
        const CheckReport rep = check_break_vanishing(entry.graph);
        CAPTURE(rep.detail);
        CHECK(rep.pass);
        CHECK(rep.checks > 0);
    }
}

TEST_CASE("orientable vanishing checks pass on the corpus") {
    for (const CorpusGraph& entry : corpus_graphs()) {
        if (entry.graph.edge_count() > 10) continue;
        CAPTURE(entry.name);
        const CheckReport rep = check_orientable_vanishing(entry.graph);
        CAPTURE(rep.detail);
        CHECK(rep.pass);
    }
}

TEST_CASE("parking functions") {
    SUBCASE("complete graphs give classical parking functions") {
        for (int n = 2; n <= 5; ++n) {
            std::vector<Edge> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
            const Multigraph kn(n, edges);
            const auto park = g_parking_functions(kn, 0);

            // Oracle: a vector is a classical parking function when its sorted
            // version sits below (0, 1, ..., n-2).
            std::vector<std::vector<long long>> expected;
            std::vector<long long> a(n - 1, 0);
            auto rec = [&](auto&& self, int pos) -> void {
                if (pos == n - 1) {
                    auto sorted = a;
                    std::sort(sorted.begin(), sorted.end());
                    for (int i = 0; i < n - 1; ++i)
                        if (sorted[i] > i) return;
                    expected.push_back(a);
                    return;
                }
                for (long long v = 0; v < n - 1; ++v) {
                    a[pos] = v;
                    self(self, pos + 1);
                }
            };
            rec(rec, 0);
            std::sort(expected.begin(), expected.end());
            CAPTURE(n);
            CHECK(park == expected);
            mpz_class count = 1;
            for (int i = 0; i < n - 2; ++i) count *= n;
            CHECK(mpz_class(static_cast<long>(park.size())) == count);
        }
    }
    SUBCASE("count is root independent and matches tree count") {
        for (const CorpusGraph& entry : corpus_graphs()) {
            if (entry.graph.num_vertices() > 5 || entry.graph.edge_count() > 9) continue;
            CAPTURE(entry.name);
            const mpz_class trees = spanning_tree_count(entry.graph);
            for (int r = 0; r < entry.graph.num_vertices(); ++r) {
                const auto park = g_parking_functions(entry.graph, r);
                CHECK(mpz_class(static_cast<long>(park.size())) == trees);
            }
        }
    }
    SUBCASE("degree histogram matches the central hilbert series") {
        const Multigraph diamond(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}});
        const auto park = g_parking_functions(diamond, 0);
        std::map<long long, long long> hist;
        for (const auto& a : park) {
            long long s = 0;
            for (long long v : a) s += v;
            hist[s] += 1;
        }
        const auto h = pspace_hilbert(diamond);
        REQUIRE(static_cast<long long>(h.size()) == diamond.genus() + 1);
        for (long long d = 0; d < static_cast<long long>(h.size()); ++d)
            CHECK(hist[d] == h[d]);
    }
    SUBCASE("bad root") {
        const Multigraph p3(3, {{0, 1, 1}, {1, 2, 1}});
        CHECK_THROWS_AS(g_parking_functions(p3, 3), ValidationError);
        CHECK_THROWS_AS(g_parking_functions(p3, -1), ValidationError);
    }
}

TEST_CASE("serial and parallel break enumeration agree") {
    for (const CorpusGraph& entry : corpus_graphs()) {
        if (entry.graph.edge_count() > 10) continue;
        CAPTURE(entry.name);
        CHECK(enumerate_break_divisors(entry.graph) ==
              enumerate_break_divisors_serial(entry.graph));
    }
}
