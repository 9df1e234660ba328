#ifndef MWC_ORACLE_HPP
#define MWC_ORACLE_HPP

#include "mwc/graph.hpp"

namespace mwc {

// Exhaustive maximum weight clique by branch enumeration with only the
// trivial remaining-weight bound. Guarded to n <= 35. Visits candidate
// vertices in ascending id and updates on strict improvement only, so the
// witness is the first maximum-weight clique in lexicographic DFS order.
Clique brute_force_opt(const WeightedGraph& g);

// Same, restricted to the induced subgraph on `subset` (alive vertices).
Clique brute_force_opt(const WeightedGraph& g, const std::vector<VertexId>& subset);

} // namespace mwc

#endif
