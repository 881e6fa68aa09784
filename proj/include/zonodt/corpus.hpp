#ifndef ZONODT_CORPUS_HPP
#define ZONODT_CORPUS_HPP

#include <string>
#include <vector>

#include "zonodt/multigraph.hpp"
#include "zonodt/quiver.hpp"

namespace zonodt {

struct CorpusGraph {
    std::string name;
    Multigraph graph;
};

struct CorpusQuiver {
    std::string name;
    SymmetricQuiver quiver;
    DimensionVector gamma;
};

// Connected multigraphs on up to 6 vertices used by the property suites.
// Members with 6 vertices stay at 7 edges or fewer and members with many
// parallel edges stay at 4 vertices or fewer, keeping the inverse-system
// checks fast.
const std::vector<CorpusGraph>& corpus_graphs();

// Quiver/dimension-vector pairs with connected covering graphs.
const std::vector<CorpusQuiver>& corpus_quivers();

} // namespace zonodt

#endif
