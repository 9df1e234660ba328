#ifndef MWC_TRACE_HPP
#define MWC_TRACE_HPP

#include "mwc/graph.hpp"

namespace mwc {

// One reduction event. Ids always refer to the input graph (reduction never
// renumbers). Field meaning per kind:
//   vertex_removed      a = vertex
//   edge_removed        a, b = endpoints
//   twin_contracted     a = survivor, b = absorbed
//   weight_transferred  a = receiving vertex v, b = donor u
//   simplicial_removed  a = vertex
struct ReductionEvent {
    enum class Kind : std::uint8_t {
        vertex_removed,
        edge_removed,
        twin_contracted,
        weight_transferred,
        simplicial_removed,
    };
    Kind kind;
    VertexId a = 0;
    VertexId b = 0;

    bool operator==(const ReductionEvent&) const = default;
};

// Append-only application-order log. Replaying it newest to oldest lifts a
// kernel clique back to an input-graph clique of equal weight accounting.
using ReductionTrace = std::vector<ReductionEvent>;

// The best input-graph clique found so far (the lower bound the bound-based
// rules compare against). Always valid in the input graph, weight
// monotonically non-decreasing.
struct BestClique {
    Clique clique;

    Weight weight() const { return clique.weight; }
    bool contains(VertexId v) const { return clique.contains(v); }
    // Adopts the candidate if strictly heavier; returns true on improvement.
    bool maybe_adopt(Clique candidate);
};

// Lifts `kernel_clique` (valid in the graph the trace was produced on, which
// must use input ids) to a clique of the input graph:
//   twin_contracted(s, a):     if s in clique, add a
//   weight_transferred(v, u):  if v in clique and u not, add u
//   everything else:           no-op
// The result keeps the kernel weight; under the transfer accounting that
// equals the recomputed input weight.
Clique reconstruct(const ReductionTrace& trace, const Clique& kernel_clique);

// Convenience overload that checks validity against the kernel graph first.
Clique reconstruct(const ReductionTrace& trace, const Clique& kernel_clique,
                   const WeightedGraph& kernel);

} // namespace mwc

#endif
