#include "mwc/bnb.hpp"

#include "mwc/bounds.hpp"
#include "mwc/maxsat.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace mwc {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const WeightedGraph& g;
    const SolveOptions& opts;
    Clique best;
    Weight bound; // max(best weight, external floor)
    SearchStats stats{};
    Clock::time_point t0 = Clock::now();
    bool out_of_time = false;
    std::vector<VertexId> current;
    Weight current_weight = 0;

    Search(const WeightedGraph& graph, const Clique& initial, const SolveOptions& o)
        : g(graph), opts(o), best(initial), bound(std::max(initial.weight, o.floor)) {}

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }

    void tick() {
        if ((++stats.nodes & 0x3ff) == 0 && elapsed() > opts.time_limit_s) out_of_time = true;
    }

    void record_if_better() {
        if (current_weight > bound) {
            bound = current_weight;
            best = make_clique(g, current);
            stats.t_best_s = elapsed();
        }
    }

    // P holds common neighbors of `current` still eligible at this node.
    void descend(std::vector<VertexId>& P) {
        tick();
        record_if_better();
        if (out_of_time || P.empty()) return;
        Weight gap = bound - current_weight;

        ColorPartition partition = greedy_coloring(g, P);
        if (coloring_upper_bound(partition) <= gap) return;

        std::vector<VertexId> branching;
        SoftSetSystem sys;
        if (opts.use_binary_maxsat) {
            BinaryFilterResult filt = binary_maxsat_filter(g, P, partition, gap);
            sys = std::move(filt.system);
            if (opts.use_ordered_maxsat || opts.use_unit_propagation) {
                for (VertexId v : filt.branching) {
                    VertexReasoning r = begin_reasoning(sys, v);
                    bool filtered = r.filtered_check(sys);
                    if (!filtered && opts.use_ordered_maxsat)
                        filtered = ordered_maxsat_reasoning(sys, r);
                    if (!filtered && opts.use_unit_propagation) {
                        unit_propagation_conflicts(sys, r);
                        filtered = r.filtered_check(sys);
                    }
                    if (filtered) {
                        commit_reasoning(sys, r);
                    } else {
                        undo_reasoning(sys, r);
                        branching.push_back(v);
                    }
                }
            } else {
                branching = std::move(filt.branching);
            }
        } else {
            branching = P;
        }

        // explore last-filtered-first; earlier branching vertices stay in the
        // candidate pool of later branches until their own subtree is done
        std::vector<VertexId> pool = P;
        for (auto it = branching.rbegin(); it != branching.rend(); ++it) {
            if (out_of_time) return;
            VertexId b = *it;
            std::vector<VertexId> child;
            child.reserve(pool.size());
            for (VertexId u : pool)
                if (u != b && g.is_adjacent(u, b)) child.push_back(u);
            current.push_back(b);
            current_weight += g.weight(b);
            descend(child);
            current.pop_back();
            current_weight -= g.weight(b);
            pool.erase(std::find(pool.begin(), pool.end(), b));
        }
    }

    SolveResult run() {
        std::vector<VertexId> order = degeneracy_ordering(g);
        std::vector<std::size_t> pos(g.num_slots(), 0);
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
        for (std::size_t i = 0; i < order.size() && !out_of_time; ++i) {
            VertexId v = order[i];
            std::vector<VertexId> candidates;
            for (VertexId u : g.neighbors(v))
                if (pos[u] > i) candidates.push_back(u);
            current.assign(1, v);
            current_weight = g.weight(v);
            descend(candidates);
        }
        stats.elapsed_s = elapsed();
        return SolveResult{std::move(best), !out_of_time, stats};
    }
};

} // namespace

SolveResult solve_exact(const WeightedGraph& g, const Clique& initial,
                        const SolveOptions& options) {
    if (g.n() != g.num_slots())
        throw std::invalid_argument("solve_exact: graph must be compacted");
    if (!g.validate_clique(initial))
        throw std::invalid_argument("solve_exact: initial clique invalid");
    if (g.n() == 0) return SolveResult{initial, true, {}};
    Search s(g, initial, options);
    return s.run();
}

} // namespace mwc
