#ifndef MWC_BNB_HPP
#define MWC_BNB_HPP

#include "mwc/graph.hpp"

#include <cstdint>
#include <limits>

namespace mwc {

struct SolveOptions {
    bool use_binary_maxsat = true;
    bool use_ordered_maxsat = true;
    bool use_unit_propagation = true;
    // External lower bound used for pruning only; the returned clique can be
    // lighter than this when nothing in the graph beats it.
    Weight floor = 0;
    double time_limit_s = std::numeric_limits<double>::infinity();
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double elapsed_s = 0.0;
    double t_best_s = 0.0; // when the returned clique was found
};

struct SolveResult {
    Clique best;
    bool proven = false;
    SearchStats stats;
};

// Branch and bound over a compacted graph (dense ids, all alive). Root
// branching follows the degeneracy ordering; at every node candidates are
// filtered by the greedy-coloring bound plus the enabled MaxSAT stages.
// `initial` must be a valid clique of g (may be empty). Deadline checks run
// every 1024 nodes; on expiry the best clique found so far is returned with
// proven = false.
SolveResult solve_exact(const WeightedGraph& g, const Clique& initial,
                        const SolveOptions& options = {});

} // namespace mwc

#endif
