#ifndef MWC_BOUNDS_HPP
#define MWC_BOUNDS_HPP

#include "mwc/graph.hpp"
#include "mwc/rng.hpp"

namespace mwc {

// Greedy first-fit coloring over a candidate set: classes are independent
// sets, disjoint, covering the candidates; class_max[j] caches w*(D_j).
struct ColorPartition {
    std::vector<std::vector<VertexId>> classes;
    std::vector<Weight> class_max;
};

struct LocalSearchConfig {
    int bms_k = 64;          // sample size for best-from-multiple-selections
    int step_budget = 256;   // moves per episode
};

// Repeatedly peels a minimum-degree vertex (smallest id on ties) from a
// scratch copy until the remainder is pairwise adjacent; returns that
// remainder. Empty graph gives the empty clique.
Clique initial_clique(const WeightedGraph& g);

// Add / swap / drop-and-restart local search seeded from `start`. Returns a
// valid clique whose weight is >= w(start); a zero step budget returns the
// seed unchanged.
Clique local_search_improve(const WeightedGraph& g, const Clique& start,
                            const LocalSearchConfig& config, Xoshiro256ss& rng);

// One local-search episode started from a random alive vertex; used by the
// reduction scheduler, which has no kernel-valid clique to seed from.
Clique local_search_episode(const WeightedGraph& g, const LocalSearchConfig& config,
                            Xoshiro256ss& rng);

// First-fit coloring of `candidates` in descending-weight order (id ties).
ColorPartition greedy_coloring(const WeightedGraph& g, const std::vector<VertexId>& candidates);

// ub(D) = sum of per-class maxima; an upper bound on any clique weight
// inside the candidate set.
Weight coloring_upper_bound(const ColorPartition& partition);

} // namespace mwc

#endif
