#include <doctest.h>

#include <string>

#include "zonodt/errors.hpp"
#include "zonodt/json_io.hpp"
#include "zonodt/tutte.hpp"

using namespace zonodt;
using nlohmann::json;

TEST_CASE("graph parsing") {
    SUBCASE("round trip keeps 1-based labels") {
        const Multigraph g = parse_graph(R"({"vertices": 3, "edges": [[1,2],[2,3,4]]})");
        CHECK(g.num_vertices() == 3);
        CHECK(g.multiplicity(0, 1) == 1);
        CHECK(g.multiplicity(1, 2) == 4);

        const json j = graph_to_json(g);
        CHECK(j["vertices"] == 3);
        CHECK(j["edges"][0] == json({1, 2, 1}));
        CHECK(j["edges"][1] == json({2, 3, 4}));
        CHECK(graph_from_json(j).edge_count() == g.edge_count());
    }
    SUBCASE("syntax errors carry position info") {
        try {
            parse_graph("{\"vertices\": 3,\n  \"edges\": [[1,2}");
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SUBCASE("semantic validation") {
        CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), ValidationError);
        CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[1]]})"), ValidationError);
        CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[1,3]]})"), ValidationError);
        CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[0,1]]})"), ValidationError);
        CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[1,2,0]]})"), ValidationError);
        CHECK_THROWS_AS(parse_graph(R"({"vertices": 2, "edges": [[1,1]]})"), ValidationError);
        CHECK_THROWS_AS(parse_graph(R"({"vertices": 1.5, "edges": []})"), ValidationError);
    }
}

TEST_CASE("quiver parsing") {
    const QuiverInput in = parse_quiver(R"({"matrix": [[1,1],[1,1]], "gamma": [2,3]})");
    CHECK(in.quiver.num_vertices() == 2);
    CHECK(in.gamma == DimensionVector{2, 3});

    CHECK_THROWS_AS(parse_quiver(R"({"matrix": [[1,2],[2,1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_quiver(R"({"matrix": [[1,2],[3,1]], "gamma": [1,1]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_quiver(R"({"matrix": "no", "gamma": [1]})"), ValidationError);
}

TEST_CASE("big integers serialize as decimal strings") {
    mpz_class big = 1;
    big <<= 100;
    CHECK(mpz_json(big) == json("1267650600228229401496703205376"));
    CHECK(mpz_json(mpz_class(-7)) == json("-7"));
}

TEST_CASE("payload shapes") {
    SUBCASE("dims and divisors") {
        CHECK(dims_json({1, 3, 4}).dump() == "[1,3,4]");
        CHECK(divisors_json({{1, 0}, {0, 1}}).dump() == "[[1,0],[0,1]]");
    }
    SUBCASE("tutte payload") {
        const json t = tutte_json(tutte(Multigraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}})));
        CHECK(t["x_degree"] == 2);
        CHECK(t["y_degree"] == 1);
        CHECK(t["spanning_trees"] == "3");
        // x^2 + x + y
        CHECK(t["coefficients"][0][1] == "1");
        CHECK(t["coefficients"][1][0] == "1");
        CHECK(t["coefficients"][2][0] == "1");
        CHECK(t["coefficients"][0][0] == "0");
    }
    SUBCASE("symmetric function payload") {
        SymFunc f{'h', {{{2, 1}, mpq_class(3, 2)}}};
        const json j = symfunc_json(f);
        CHECK(j["basis"] == "h");
        REQUIRE(j["coeffs"].size() == 1);
        CHECK(j["coeffs"][0]["partition"] == json({2, 1}));
        CHECK(j["coeffs"][0]["num"] == "3");
        CHECK(j["coeffs"][0]["den"] == "2");
    }
    SUBCASE("orbit payload") {
        OrbitReport rep;
        rep.orbits.push_back({{1, 0}, 2, {1, 1}});
        const json j = orbit_report_json(rep);
        CHECK(j[0]["representative"] == json({1, 0}));
        CHECK(j[0]["size"] == 2);
        CHECK(j[0]["type"] == json({1, 1}));
    }
}
