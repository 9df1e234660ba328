#ifndef MWC_REDUCTIONS_HPP
#define MWC_REDUCTIONS_HPP

#include "mwc/graph.hpp"
#include "mwc/trace.hpp"

#include <vector>

namespace mwc {

// Exact reduction rules. Each is a check-then-apply operation: on success the
// graph is mutated, the trace extended, and `touched` (when given) collects
// vertices whose local structure changed, for dependency re-queueing. A rule
// that returns false leaves graph and trace untouched.

// Remove v when w(N[v]) <= w(best). O(1) via the neighborhood weight cache.
bool reduce_neighborhood_weight(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                const BestClique& best,
                                std::vector<VertexId>* touched = nullptr);

// Remove v when both the bound excluding its heaviest neighbor u* and the
// bound including u* are <= w(best). Skips vertices of the best clique.
bool reduce_largest_weight_neighbor(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                    const BestClique& best,
                                    std::vector<VertexId>* touched = nullptr);

// Contract v with a twin u (N[u] = N[v]); the smaller id survives carrying
// the combined weight.
bool reduce_twin(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                 std::vector<VertexId>* touched = nullptr);

// Remove v when some non-adjacent u dominates it: N(v) ⊆ N(u), w(v) <= w(u).
// Two-hop scan through an arbitrary neighbor of v. Mutually dominating pairs
// of equal weight drop the larger id.
bool reduce_domination_nonadjacent(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                   std::vector<VertexId>* touched = nullptr);

// For adjacent u, v with N(v) ⊆ N[u]: transfer w(u) onto v and cut the edge.
// Logs weight_transferred(v, u) then edge_removed(u, v), in that order.
bool reduce_domination_adjacent(WeightedGraph& g, ReductionTrace& trace, VertexId u, VertexId v,
                                std::vector<VertexId>* touched = nullptr);

// Driver that scans v's neighbors for a dominating partner.
bool reduce_domination_adjacent_at(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                   std::vector<VertexId>* touched = nullptr);

// Drop every incident edge {v,u} whose including bound
// w(v)+w(u)+w(N(v)∩N(u)) is strictly below w(best). Returns edges removed.
int reduce_edge_bounding(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                         const BestClique& best,
                         std::vector<VertexId>* touched = nullptr);

// Remove a simplicial v (N[v] a clique); when w(N[v]) beats the best clique,
// lift N[v] through the trace so far and adopt it first.
bool reduce_simplicial(WeightedGraph& g, ReductionTrace& trace, VertexId v, BestClique& best,
                       std::vector<VertexId>* touched = nullptr);

} // namespace mwc

#endif
