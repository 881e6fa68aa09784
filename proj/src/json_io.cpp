#include "zonodt/json_io.hpp"

#include <string>
#include <vector>

#include "zonodt/errors.hpp"

namespace zonodt {

using nlohmann::json;

namespace {

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(e.what());  // message carries line and column
    }
}

long long require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ValidationError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

} // namespace

Multigraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON needs \"vertices\" and \"edges\" fields");
    const long long n = require_int(j["vertices"], "\"vertices\"");
    if (n < 1 || n > 1000000) throw ValidationError("vertex count out of range");
    if (!j["edges"].is_array()) throw ValidationError("\"edges\" must be an array");

    std::vector<Edge> edges;
    for (const json& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3)
            throw ValidationError("each edge must be [u, v] or [u, v, multiplicity]");
        const long long u = require_int(e[0], "edge endpoint");
        const long long v = require_int(e[1], "edge endpoint");
        const long long m = e.size() == 3 ? require_int(e[2], "edge multiplicity") : 1;
        if (u < 1 || u > n || v < 1 || v > n)
            throw ValidationError("edge endpoint out of the 1.." + std::to_string(n) +
                                  " range");
        if (m < 1 || m > 1000000) throw ValidationError("edge multiplicity out of range");
        edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1),
                         static_cast<int>(m)});
    }
    return Multigraph(static_cast<int>(n), edges);
}

Multigraph parse_graph(const std::string& text) { return graph_from_json(parse_text(text)); }

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, e.mult});
    return json{{"vertices", g.num_vertices()}, {"edges", edges}};
}

QuiverInput quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("matrix") || !j.contains("gamma"))
        throw ValidationError("quiver JSON needs \"matrix\" and \"gamma\" fields");
    if (!j["matrix"].is_array()) throw ValidationError("\"matrix\" must be an array of rows");

    std::vector<std::vector<long long>> matrix;
    for (const json& row : j["matrix"]) {
        if (!row.is_array()) throw ValidationError("\"matrix\" rows must be arrays");
        std::vector<long long> r;
        for (const json& v : row) r.push_back(require_int(v, "arrow count"));
        matrix.push_back(std::move(r));
    }

    if (!j["gamma"].is_array()) throw ValidationError("\"gamma\" must be an array");
    DimensionVector gamma;
    for (const json& v : j["gamma"]) gamma.push_back(require_int(v, "gamma entry"));

    return QuiverInput{SymmetricQuiver(std::move(matrix)), std::move(gamma)};
}

QuiverInput parse_quiver(const std::string& text) {
    return quiver_from_json(parse_text(text));
}

json divisors_json(const std::vector<Divisor>& divisors) {
    json out = json::array();
    for (const Divisor& d : divisors) out.push_back(d);
    return out;
}

json dims_json(const GradedDims& dims) {
    json out = json::array();
    for (long long d : dims) out.push_back(d);
    return out;
}

json orbit_report_json(const OrbitReport& report) {
    json out = json::array();
    for (const OrbitInfo& o : report.orbits) {
        json entry{{"representative", o.rep}, {"size", o.size}};
        if (!o.stab_type.empty()) entry["type"] = o.stab_type;
        out.push_back(entry);
    }
    return out;
}

json mpz_json(const mpz_class& z) { return z.get_str(); }

json tutte_json(const TuttePoly& t) {
    json rows = json::array();
    for (int i = 0; i <= t.x_degree(); ++i) {
        json row = json::array();
        for (int j = 0; j <= t.y_degree(); ++j) row.push_back(mpz_json(t.coeff(i, j)));
        rows.push_back(row);
    }
    return json{{"coefficients", rows},
                {"x_degree", t.x_degree()},
                {"y_degree", t.y_degree()},
                {"spanning_trees", mpz_json(t.tree_count())}};
}

json symfunc_json(const SymFunc& f) {
    json coeffs = json::array();
    for (const auto& [partition, c] : f.coeffs) {
        coeffs.push_back(json{{"partition", partition},
                              {"num", c.get_num().get_str()},
                              {"den", c.get_den().get_str()}});
    }
    return json{{"basis", std::string(1, f.basis)}, {"coeffs", coeffs}};
}

} // namespace zonodt
