#include "mwc/peel.hpp"

#include "mwc/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace mwc {

std::size_t peel_batch_size(std::size_t n, const PeelConfig& config) {
    if (n == 0) return 0;
    double raw;
    if (n > config.large_n_cutoff) {
        raw = config.large_fraction * static_cast<double>(n);
    } else if (config.quadratic_small_batch) {
        raw = config.small_fraction * static_cast<double>(n) * static_cast<double>(n) /
              static_cast<double>(config.large_n_cutoff);
    } else {
        raw = config.small_fraction * static_cast<double>(n);
    }
    auto batch = static_cast<std::size_t>(raw);
    return std::max<std::size_t>(batch, 1);
}

Weight peel_score(const WeightedGraph& g, VertexId v) { return g.neighborhood_weight(v); }

bool should_stop(Weight initial_max, Weight current_min, Weight current_max,
                 const PeelConfig& config) {
    if (static_cast<double>(current_max) <
        config.score_deterioration_threshold * static_cast<double>(initial_max))
        return true;
    return static_cast<double>(current_min) >
           config.score_gap_threshold * static_cast<double>(current_max);
}

PeelResult mwc_peel(const WeightedGraph& input, const PeelConfig& config) {
    using Clock = std::chrono::steady_clock;
    auto t0 = Clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - t0).count(); };

    PeelResult res;
    WeightedGraph g = input;
    ReductionTrace trace;
    BestClique best{initial_clique(g)};
    PeelStats& st = res.stats;
    st.t_best_s = 0.0;

    Weight initial_max_score = 0;
    bool first_iteration = true;
    while (true) {
        SchedulerConfig sched = config.scheduler;
        sched.degree_limit_enabled = first_iteration;
        double best_before = best.weight();
        ReduceStats rstats = reduce(g, best, trace, sched);
        if (best.weight() > best_before) st.t_best_s = elapsed();
        if (first_iteration) st.first_reduce = rstats;

        if (g.n() == 0) {
            st.stop_reason = "reductions emptied the graph";
            break;
        }
        Weight cur_min = 0, cur_max = 0;
        bool have = false;
        for (VertexId v : g.alive_vertices()) {
            Weight s = peel_score(g, v);
            if (!have) {
                cur_min = cur_max = s;
                have = true;
            } else {
                cur_min = std::min(cur_min, s);
                cur_max = std::max(cur_max, s);
            }
        }
        if (first_iteration) initial_max_score = cur_max;
        first_iteration = false;

        if (should_stop(initial_max_score, cur_min, cur_max, config)) {
            st.stop_reason = "score stopping criteria";
            break;
        }
        if (g.n() <= config.small_residue_n) {
            st.stop_reason = "small residue";
            break;
        }
        if (elapsed() > config.time_limit_s) {
            st.stop_reason = "time limit";
            break;
        }

        GraphSnapshot snapshot{g, trace, best};
        std::size_t batch = peel_batch_size(g.n(), config);
        std::vector<std::pair<Weight, VertexId>> scored;
        scored.reserve(g.n());
        for (VertexId v : g.alive_vertices()) scored.emplace_back(peel_score(g, v), v);
        std::sort(scored.begin(), scored.end());
        for (std::size_t i = 0; i < batch && i < scored.size(); ++i) {
            g.remove_vertex(scored[i].second);
            trace.push_back({ReductionEvent::Kind::vertex_removed, scored[i].second, 0});
        }
        st.peeled_vertices += std::min(batch, scored.size());
        ++st.rounds;
        if (g.n() == 0) {
            // fail-safe: peeling wiped the graph, fall back to the backup
            g = std::move(snapshot.graph);
            trace = std::move(snapshot.trace);
            best = std::move(snapshot.best);
            st.restored_snapshot = true;
            st.stop_reason = "peeling emptied the graph, snapshot restored";
            break;
        }
    }

    st.residue_n = g.n();
    st.residue_m = g.m();
    if (g.n() > 0) {
        auto [kernel, orig_ids] = g.compact();
        SolveOptions opts = config.exact;
        opts.floor = best.weight();
        opts.time_limit_s = std::max(0.0, config.time_limit_s - elapsed());
        double solve_start = elapsed();
        SolveResult sr = solve_exact(kernel, initial_clique(kernel), opts);
        st.residue_solved_exactly = sr.proven;
        if (sr.best.weight > best.weight()) {
            std::vector<VertexId> lifted;
            lifted.reserve(sr.best.members.size());
            for (VertexId v : sr.best.members) lifted.push_back(orig_ids[v]);
            if (best.maybe_adopt(reconstruct(trace, Clique{std::move(lifted), sr.best.weight})))
                st.t_best_s = solve_start + sr.stats.t_best_s;
        }
    } else {
        st.residue_solved_exactly = true;
    }
    res.best = best.clique;
    st.elapsed_s = elapsed();
    return res;
}

} // namespace mwc
