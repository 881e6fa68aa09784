#ifndef ZONODT_JSON_IO_HPP
#define ZONODT_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "zonodt/divisor.hpp"
#include "zonodt/multigraph.hpp"
#include "zonodt/pspace.hpp"
#include "zonodt/quiver.hpp"
#include "zonodt/symfunc.hpp"
#include "zonodt/tutte.hpp"

namespace zonodt {

// Graph files use 1-based vertex labels:
//   {"vertices": 4, "edges": [[1,2], [2,3,5]]}
// where the optional third entry is the multiplicity.
Multigraph parse_graph(const std::string& text);
Multigraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Multigraph& g);

struct QuiverInput {
    SymmetricQuiver quiver;
    DimensionVector gamma;
};

// {"matrix": [[2,1],[1,2]], "gamma": [2,3]}
QuiverInput parse_quiver(const std::string& text);
QuiverInput quiver_from_json(const nlohmann::json& j);

// Integers that can exceed 64 bits are serialized as decimal strings.
nlohmann::json divisors_json(const std::vector<Divisor>& divisors);
nlohmann::json dims_json(const GradedDims& dims);
nlohmann::json orbit_report_json(const OrbitReport& report);
nlohmann::json tutte_json(const TuttePoly& t);
nlohmann::json mpz_json(const mpz_class& z);
nlohmann::json symfunc_json(const SymFunc& f);

} // namespace zonodt

#endif
