#ifndef MWC_SCHEDULER_HPP
#define MWC_SCHEDULER_HPP

#include "mwc/bounds.hpp"
#include "mwc/graph.hpp"
#include "mwc/trace.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace mwc {

// Which rules the scheduler runs. `old_rules` is the literature baseline
// (neighborhood weight + largest-weight neighbor); `all_rules` adds twin,
// simplicial, edge bounding (which subsumes the largest-weight-neighbor
// vertex check), and both domination cases.
enum class RuleSet { old_rules, all_rules };

enum class Rule : std::uint8_t {
    neighborhood_weight,
    largest_weight_neighbor,
    twin,
    simplicial,
    edge_bounding,
    domination_nonadjacent,
    domination_adjacent,
};
inline constexpr std::size_t kRuleCount = 7;

const char* rule_name(Rule r);

struct SchedulerConfig {
    double rate_threshold = 0.01;        // fraction of (n+m) per second
    bool degree_limit_enabled = false;
    double initial_degree_fraction = 0.10;
    double degree_fraction_step = 0.10;
    bool ls_interleave = true;
    bool resweep_on_improvement = true;  // reset bound-rule queues when w(C^) grows
    std::uint64_t seed = 1;
    LocalSearchConfig local_search;
};

struct RuleStats {
    std::uint64_t checks = 0;
    std::uint64_t fired = 0;
    std::uint64_t vertices_removed = 0;
    std::uint64_t edges_removed = 0;
    std::uint64_t pauses = 0;
};

struct ReduceStats {
    std::array<RuleStats, kRuleCount> per_rule{};
    std::size_t initial_n = 0, initial_m = 0;
    std::size_t kernel_n = 0, kernel_m = 0;
    double elapsed_s = 0.0;
    double last_improvement_s = 0.0; // offset from reduce() entry, 0 if none
    std::uint64_t ls_improvements = 0;
};

// Algorithm: iterate the rule set over per-rule viable-vertex queues with
// dependency checking; pause rules whose removal rate falls under
// rate_threshold of the current graph size per second until the others have
// reduced the graph by that amount; optionally withhold vertices above a
// degree cap that starts at initial_degree_fraction of the maximum degree
// and grows stepwise once every rule is exhausted at the current cap.
// `best` must be valid in the input graph behind `g`'s trace; it is improved
// by simplicial lifts and interleaved local search.
ReduceStats reduce(WeightedGraph& g, BestClique& best, ReductionTrace& trace,
                   const SchedulerConfig& config, RuleSet rules = RuleSet::all_rules);

} // namespace mwc

#endif
