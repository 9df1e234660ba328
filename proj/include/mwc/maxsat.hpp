#ifndef MWC_MAXSAT_HPP
#define MWC_MAXSAT_HPP

#include "mwc/bounds.hpp"
#include "mwc/graph.hpp"

#include <cstddef>
#include <vector>

namespace mwc {

// A soft set is an independent set of (vertex, contribution) entries; a
// vertex split across several sets carries a partial contribution in each.
// max_contrib caches w*(S), the most any clique can collect from the set.
struct SoftSet {
    std::vector<VertexId> members;
    std::vector<Weight> contribs;
    Weight max_contrib = 0;
};

// Weighted independent-set system used to bound and filter branching
// candidates. ub is the running sum of per-set maxima; every vertex the
// filter removed from the branching set is fully covered by the system, so
// ub bounds any clique among covered vertices.
struct SoftSetSystem {
    const WeightedGraph* g = nullptr;
    Weight gap = 0; // w(C^) - w(C) at the node
    std::vector<SoftSet> sets;
    Weight ub = 0;

    bool set_contains(std::size_t j, VertexId v) const;
    // true when some member of set j is adjacent to v
    bool set_conflicts(std::size_t j, VertexId v) const;
    void add_member(std::size_t j, VertexId v, Weight contrib);
    std::size_t add_set(VertexId v, Weight contrib);

    // every vertex's contributions sum back to its graph weight (+residual
    // singleton if committed); bookkeeping check used by tests
    Weight total_contribution(VertexId v) const;
};

struct BinaryFilterResult {
    std::vector<VertexId> branching; // B, in pipeline processing order
    SoftSetSystem system;
};

// Stage 1: greedily accumulates whole color classes while ub stays within
// the gap, then absorbs leftover vertices one by one as new singleton sets
// or by splitting their weight across compatible sets. Vertices that cannot
// be absorbed within the gap stay in the branching set.
BinaryFilterResult binary_maxsat_filter(const WeightedGraph& g,
                                        const std::vector<VertexId>& candidates,
                                        const ColorPartition& partition, Weight gap);

// Scratch state while certifying one branching vertex. `residual` is the
// weight left uncovered after the re-split; `budget` is what remains of it
// after conflict reliefs; `avail` is each set's consumable slack this round.
struct VertexReasoning {
    VertexId v = 0;
    Weight residual = 0;
    Weight budget = 0;
    std::vector<Weight> avail;
    std::vector<std::pair<std::size_t, Weight>> splits;
    bool filtered_check(const SoftSetSystem& sys) const { return sys.ub + budget <= sys.gap; }
};

// Re-splits v's weight across compatible sets (the splits are applied to the
// system; commit or undo below must follow).
VertexReasoning begin_reasoning(SoftSetSystem& sys, VertexId v);

// Stage 2: hunts conflict triples {{v}, U_j, D_q} where U_j holds exactly one
// neighbor u of v and no member of D_q is adjacent to both v and u. Each
// conflict relieves the bound by beta = min(budget, avail(U_j), avail(D_q)),
// consuming both sets. Returns true once ub + budget <= gap.
bool ordered_maxsat_reasoning(SoftSetSystem& sys, VertexReasoning& r);

// Stage 3: unit propagation. Satisfies the unit clause {v}, deletes literals
// incompatible with each satisfied choice, and treats an emptied clause as a
// conflict among the satisfied chain; relief is the minimum slack of the
// involved sets (the unit's budget included). Splitting leaves the remainder
// available, so chained conflicts accumulate. Returns the total relief.
Weight unit_propagation_conflicts(SoftSetSystem& sys, VertexReasoning& r);

// Persist v's splits; the residual becomes a singleton set so the system
// keeps covering v for later certificates.
void commit_reasoning(SoftSetSystem& sys, VertexReasoning& r);
// Remove v's splits, restoring the system.
void undo_reasoning(SoftSetSystem& sys, VertexReasoning& r);

} // namespace mwc

#endif
