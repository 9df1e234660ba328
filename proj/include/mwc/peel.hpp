#ifndef MWC_PEEL_HPP
#define MWC_PEEL_HPP

#include "mwc/bnb.hpp"
#include "mwc/graph.hpp"
#include "mwc/scheduler.hpp"
#include "mwc/trace.hpp"

#include <cstdint>
#include <limits>
#include <string>

namespace mwc {

struct PeelConfig {
    double score_deterioration_threshold = 0.9; // stop: cur_max < thr * initial_max
    double score_gap_threshold = 0.9;           // stop: cur_min > thr * cur_max
    std::size_t large_n_cutoff = 50000;
    double large_fraction = 0.1;
    double small_fraction = 0.01;
    // literal small-n branch is 0.01*n; this switches to 0.01*n^2/50000
    bool quadratic_small_batch = false;
    std::size_t small_residue_n = 1024; // hand over to the exact solver below this
    SchedulerConfig scheduler;
    SolveOptions exact;
    double time_limit_s = std::numeric_limits<double>::infinity();
};

struct PeelStats {
    std::size_t rounds = 0;
    std::size_t peeled_vertices = 0;
    bool restored_snapshot = false;
    std::string stop_reason;
    std::size_t residue_n = 0, residue_m = 0;
    bool residue_solved_exactly = false;
    double elapsed_s = 0.0;
    double t_best_s = 0.0;
    ReduceStats first_reduce;
};

struct PeelResult {
    Clique best; // valid in the input graph
    PeelStats stats;
};

// Vertices to peel in one batch: floor(0.1 n) above the cutoff, floor(0.01 n)
// below it, never less than 1 while the graph is non-empty.
std::size_t peel_batch_size(std::size_t n, const PeelConfig& config);

// Peeling score: the cached closed-neighborhood weight w(N[v]).
Weight peel_score(const WeightedGraph& g, VertexId v);

// Stopping criteria: the maximum score deteriorated below the threshold of
// the pre-peeling maximum, or the min/max spread collapsed.
bool should_stop(Weight initial_max, Weight current_min, Weight current_max,
                 const PeelConfig& config);

// Full snapshot taken before each peel batch; restored when peeling empties
// the graph.
struct GraphSnapshot {
    WeightedGraph graph;
    ReductionTrace trace;
    BestClique best;
};

// Alternates exhaustive exact reduction (degree-limited on the first pass
// only) with batches of lowest-score peels, then finishes with the exact
// solver on the residue and lifts the result through the trace.
PeelResult mwc_peel(const WeightedGraph& input, const PeelConfig& config);

} // namespace mwc

#endif
