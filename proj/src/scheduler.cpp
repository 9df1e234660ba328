#include "mwc/scheduler.hpp"

#include "mwc/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>

namespace mwc {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::neighborhood_weight: return "neighborhood_weight";
    case Rule::largest_weight_neighbor: return "largest_weight_neighbor";
    case Rule::twin: return "twin";
    case Rule::simplicial: return "simplicial";
    case Rule::edge_bounding: return "edge_bounding";
    case Rule::domination_nonadjacent: return "domination_nonadjacent";
    case Rule::domination_adjacent: return "domination_adjacent";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// FIFO viable-vertex queue with a membership flag and a deferred pool for
// vertices withheld by the degree cap.
struct RuleQueue {
    std::deque<VertexId> queue;
    std::vector<char> queued;
    std::vector<char> deferred_flag;
    std::vector<VertexId> deferred;
    bool paused = false;
    // pause bookkeeping: unpause once n+m has dropped by `required` below `baseline`
    std::size_t pause_baseline = 0;
    std::size_t pause_required = 0;

    explicit RuleQueue(std::size_t slots) : queued(slots, 0), deferred_flag(slots, 0) {}

    void push(VertexId v) {
        if (queued[v] || deferred_flag[v]) return;
        queued[v] = 1;
        queue.push_back(v);
    }

    void defer(VertexId v) {
        if (!deferred_flag[v]) {
            deferred_flag[v] = 1;
            deferred.push_back(v);
        }
    }

    void restore_deferred() {
        for (VertexId v : deferred) {
            deferred_flag[v] = 0;
            if (!queued[v]) {
                queued[v] = 1;
                queue.push_back(v);
            }
        }
        deferred.clear();
    }

    void fill_all_alive(const WeightedGraph& g) {
        for (VertexId v : g.alive_vertices()) push(v);
    }

    bool exhausted() const { return queue.empty() && deferred.empty(); }
};

bool is_bound_rule(Rule r) {
    return r == Rule::neighborhood_weight || r == Rule::largest_weight_neighbor ||
           r == Rule::edge_bounding;
}

struct Scheduler {
    WeightedGraph& g;
    BestClique& best;
    ReductionTrace& trace;
    const SchedulerConfig& cfg;
    std::vector<Rule> order;
    std::vector<RuleQueue> queues;
    ReduceStats stats{};
    Xoshiro256ss rng;
    Clock::time_point t0 = Clock::now();
    std::size_t degree_cap = 0;
    bool cap_limited = false;
    std::size_t cap_step = 0;
    std::vector<VertexId> touched;

    Scheduler(WeightedGraph& graph, BestClique& b, ReductionTrace& tr,
              const SchedulerConfig& config, RuleSet rules)
        : g(graph), best(b), trace(tr), cfg(config), rng(config.seed) {
        if (rules == RuleSet::old_rules) {
            order = {Rule::neighborhood_weight, Rule::largest_weight_neighbor};
        } else {
            // fixed application order; edge bounding covers the
            // largest-weight-neighbor vertex check
            order = {Rule::neighborhood_weight, Rule::twin, Rule::simplicial,
                     Rule::edge_bounding, Rule::domination_nonadjacent,
                     Rule::domination_adjacent};
        }
        for (std::size_t i = 0; i < order.size(); ++i) queues.emplace_back(g.num_slots());
        for (auto& q : queues) q.fill_all_alive(g);
        if (cfg.degree_limit_enabled && g.n() > 0) {
            cap_limited = true;
            cap_step = 1;
            degree_cap = cap_for_step();
        }
    }

    std::size_t delta0 = 0;

    std::size_t cap_for_step() {
        if (delta0 == 0) delta0 = g.max_degree();
        double frac = cfg.initial_degree_fraction + (double)(cap_step - 1) * cfg.degree_fraction_step;
        auto cap = static_cast<std::size_t>(std::ceil(frac * (double)delta0));
        return std::max<std::size_t>(cap, 1);
    }

    std::size_t graph_size() const { return g.n() + g.m(); }

    void requeue_touched() {
        for (VertexId v : touched) {
            if (!g.alive(v)) continue;
            for (auto& q : queues) q.push(v);
        }
        touched.clear();
    }

    void on_improvement(double when_s) {
        stats.last_improvement_s = when_s;
        if (!cfg.resweep_on_improvement) return;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (!is_bound_rule(order[i])) continue;
            queues[i].paused = false;
            queues[i].fill_all_alive(g);
        }
    }

    // one application attempt; true if the rule fired at v
    bool apply_rule(std::size_t idx, VertexId v) {
        RuleStats& rs = stats.per_rule[static_cast<std::size_t>(order[idx])];
        ++rs.checks;
        std::size_t n0 = g.n(), m0 = g.m();
        Weight best0 = best.weight();
        bool fired = false;
        switch (order[idx]) {
        case Rule::neighborhood_weight:
            fired = reduce_neighborhood_weight(g, trace, v, best, &touched);
            break;
        case Rule::largest_weight_neighbor:
            fired = reduce_largest_weight_neighbor(g, trace, v, best, &touched);
            break;
        case Rule::twin:
            fired = reduce_twin(g, trace, v, &touched);
            break;
        case Rule::simplicial:
            fired = reduce_simplicial(g, trace, v, best, &touched);
            break;
        case Rule::edge_bounding:
            fired = reduce_edge_bounding(g, trace, v, best, &touched) > 0;
            break;
        case Rule::domination_nonadjacent:
            fired = reduce_domination_nonadjacent(g, trace, v, &touched);
            break;
        case Rule::domination_adjacent:
            fired = reduce_domination_adjacent_at(g, trace, v, &touched);
            break;
        }
        if (fired) {
            ++rs.fired;
            rs.vertices_removed += n0 - g.n();
            rs.edges_removed += m0 - g.m();
            requeue_touched();
            if (best.weight() > best0) on_improvement(seconds_since(t0));
        } else {
            touched.clear();
        }
        return fired;
    }

    // Runs rule idx over its queue. Returns removed vertex+edge count.
    // Pauses the rule when its removal rate drops below the threshold; rate
    // checks need at least a 10 ms sample so small instances never pause.
    std::size_t run_pass(std::size_t idx) {
        RuleQueue& q = queues[idx];
        auto pass_start = Clock::now();
        std::size_t removed = 0;
        std::size_t processed = 0;
        while (!q.queue.empty()) {
            VertexId v = q.queue.front();
            q.queue.pop_front();
            q.queued[v] = 0;
            if (!g.alive(v)) continue;
            if (cap_limited && g.degree(v) > degree_cap) {
                q.defer(v);
                continue;
            }
            std::size_t size0 = graph_size();
            apply_rule(idx, v);
            removed += size0 - graph_size();
            ++processed;
            if ((processed & 0xff) == 0 && check_rate(idx, pass_start, removed)) return removed;
        }
        check_rate(idx, pass_start, removed);
        return removed;
    }

    bool check_rate(std::size_t idx, Clock::time_point pass_start, std::size_t removed) {
        double elapsed = std::chrono::duration<double>(Clock::now() - pass_start).count();
        if (elapsed < 0.010) return false; // minimum sample window
        double required_per_s = cfg.rate_threshold * (double)graph_size();
        if ((double)removed / elapsed >= required_per_s) return false;
        RuleQueue& q = queues[idx];
        q.paused = true;
        q.pause_baseline = graph_size();
        q.pause_required = (std::size_t)std::ceil(cfg.rate_threshold * (double)q.pause_baseline);
        ++stats.per_rule[static_cast<std::size_t>(order[idx])].pauses;
        return true;
    }

    bool try_unpause(std::size_t idx) {
        RuleQueue& q = queues[idx];
        if (!q.paused) return true;
        std::size_t now = graph_size();
        if (q.pause_baseline >= now + q.pause_required) {
            q.paused = false;
            return true;
        }
        return false;
    }

    void ls_episode() {
        if (!cfg.ls_interleave || g.n() == 0) return;
        Clique kernel_best = local_search_episode(g, cfg.local_search, rng);
        if (kernel_best.weight > best.weight()) {
            if (best.maybe_adopt(reconstruct(trace, kernel_best))) {
                ++stats.ls_improvements;
                on_improvement(seconds_since(t0));
            }
        }
    }

    ReduceStats run() {
        stats.initial_n = g.n();
        stats.initial_m = g.m();
        while (true) {
            bool progress = false;
            for (std::size_t i = 0; i < order.size(); ++i) {
                RuleQueue& q = queues[i];
                if (q.queue.empty()) continue; // exhausted (paused or not)
                if (!try_unpause(i)) continue;
                if (run_pass(i) > 0) progress = true;
                ls_episode();
            }
            bool all_idle = true;
            for (auto& q : queues)
                if (!q.queue.empty() && !q.paused) all_idle = false;
            if (!all_idle) continue;
            if (cap_limited) {
                // every rule exhausted or paused at this cap: raise it
                if (degree_cap >= g.max_degree()) {
                    cap_limited = false;
                    for (auto& q : queues) q.restore_deferred();
                } else {
                    ++cap_step;
                    degree_cap = cap_for_step();
                    for (auto& q : queues) q.restore_deferred();
                }
                continue;
            }
            if (!progress) break;
        }
        stats.kernel_n = g.n();
        stats.kernel_m = g.m();
        stats.elapsed_s = seconds_since(t0);
        return stats;
    }
};

} // namespace

ReduceStats reduce(WeightedGraph& g, BestClique& best, ReductionTrace& trace,
                   const SchedulerConfig& config, RuleSet rules) {
    Scheduler s(g, best, trace, config, rules);
    return s.run();
}

} // namespace mwc
