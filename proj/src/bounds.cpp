#include "mwc/bounds.hpp"

#include <algorithm>
#include <queue>

namespace mwc {

Clique initial_clique(const WeightedGraph& g) {
    if (g.n() == 0) return {};
    std::vector<std::size_t> deg(g.num_slots(), 0);
    std::vector<char> removed(g.num_slots(), 1);
    using Entry = std::pair<std::size_t, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (VertexId v = 0; v < g.num_slots(); ++v) {
        if (!g.alive(v)) continue;
        deg[v] = g.degree(v);
        removed[v] = 0;
        heap.emplace(deg[v], v);
    }
    std::size_t remaining = g.n();
    std::size_t edges = g.m();
    // Remainder is a clique exactly when its edge count is complete.
    while (edges != remaining * (remaining - 1) / 2) {
        auto [d, v] = heap.top();
        heap.pop();
        if (removed[v] || d != deg[v]) continue;
        removed[v] = 1;
        edges -= deg[v];
        --remaining;
        for (VertexId u : g.neighbors(v)) {
            if (removed[u]) continue;
            --deg[u];
            heap.emplace(deg[u], u);
        }
    }
    std::vector<VertexId> members;
    for (VertexId v = 0; v < g.num_slots(); ++v)
        if (g.alive(v) && !removed[v]) members.push_back(v);
    return make_clique(g, members);
}

ColorPartition greedy_coloring(const WeightedGraph& g, const std::vector<VertexId>& candidates) {
    std::vector<VertexId> order = candidates;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        Weight wa = g.weight(a), wb = g.weight(b);
        return wa != wb ? wa > wb : a < b;
    });
    ColorPartition p;
    for (VertexId v : order) {
        std::size_t j = 0;
        for (; j < p.classes.size(); ++j) {
            bool blocked = false;
            for (VertexId u : p.classes[j]) {
                if (g.is_adjacent(u, v)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) break;
        }
        if (j == p.classes.size()) {
            p.classes.emplace_back();
            p.class_max.push_back(g.weight(v));
        }
        p.classes[j].push_back(v);
        // Descending insertion order keeps the first member the class max.
    }
    return p;
}

Weight coloring_upper_bound(const ColorPartition& partition) {
    Weight ub = 0;
    for (Weight w : partition.class_max) ub += w;
    return ub;
}

namespace {

// Shared move engine. Counts of members adjacent to each vertex drive both
// add candidates (count == |C|) and swap candidates (count == |C|-1).
class LocalSearch {
public:
    LocalSearch(const WeightedGraph& g, const LocalSearchConfig& cfg, Xoshiro256ss& rng)
        : g_(g), cfg_(cfg), rng_(rng) {}

    Clique run(Clique start) {
        current_ = start.members;
        current_weight_ = start.weight;
        best_ = std::move(start);
        for (int step = 0; step < cfg_.step_budget; ++step) {
            if (current_.empty()) break;
            if (!try_add() && !try_swap()) perturb();
        }
        return best_;
    }

private:
    void record() {
        if (current_weight_ > best_.weight)
            best_ = make_clique(g_, current_);
    }

    // adjacency counts of current_ over the union of member neighborhoods
    void gather_counts(std::vector<VertexId>& touched, std::vector<int>& count) {
        count.assign(g_.num_slots(), 0);
        touched.clear();
        for (VertexId c : current_) {
            for (VertexId u : g_.neighbors(c)) {
                if (count[u] == 0) touched.push_back(u);
                ++count[u];
            }
        }
    }

    bool in_current(VertexId v) const {
        return std::find(current_.begin(), current_.end(), v) != current_.end();
    }

    bool try_add() {
        std::vector<VertexId> touched;
        std::vector<int> count;
        gather_counts(touched, count);
        std::vector<VertexId> cands;
        for (VertexId u : touched)
            if (count[u] == static_cast<int>(current_.size()) && !in_current(u)) cands.push_back(u);
        if (cands.empty()) return false;
        std::sort(cands.begin(), cands.end());
        // BMS: sample bms_k candidates, keep the heaviest (smallest id ties).
        VertexId pick = cands[0];
        Weight pick_w = g_.weight(pick);
        if (cands.size() > 1) {
            for (int i = 0; i < cfg_.bms_k; ++i) {
                VertexId u = cands[rng_.below(cands.size())];
                Weight wu = g_.weight(u);
                if (wu > pick_w || (wu == pick_w && u < pick)) {
                    pick = u;
                    pick_w = wu;
                }
            }
        }
        current_.push_back(pick);
        current_weight_ += pick_w;
        record();
        return true;
    }

    bool try_swap() {
        std::vector<VertexId> touched;
        std::vector<int> count;
        gather_counts(touched, count);
        VertexId best_in = 0, best_out = 0;
        Weight best_gain = 0;
        for (VertexId u : touched) {
            if (count[u] != static_cast<int>(current_.size()) - 1 || in_current(u)) continue;
            // find the single member u is not adjacent to
            for (VertexId c : current_) {
                if (!g_.is_adjacent(u, c)) {
                    Weight gain = g_.weight(u) - g_.weight(c);
                    if (gain > best_gain || (gain == best_gain && gain > 0 && u < best_in)) {
                        best_gain = gain;
                        best_in = u;
                        best_out = c;
                    }
                    break;
                }
            }
        }
        if (best_gain <= 0) return false;
        current_.erase(std::find(current_.begin(), current_.end(), best_out));
        current_.push_back(best_in);
        current_weight_ += best_gain;
        record();
        return true;
    }

    void perturb() {
        if (current_.size() <= 1) {
            auto alive = g_.alive_vertices();
            current_.assign(1, alive[rng_.below(alive.size())]);
            current_weight_ = g_.weight(current_[0]);
        } else {
            std::size_t i = rng_.below(current_.size());
            current_weight_ -= g_.weight(current_[i]);
            current_.erase(current_.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    const WeightedGraph& g_;
    const LocalSearchConfig& cfg_;
    Xoshiro256ss& rng_;
    std::vector<VertexId> current_;
    Weight current_weight_ = 0;
    Clique best_;
};

} // namespace

Clique local_search_improve(const WeightedGraph& g, const Clique& start,
                            const LocalSearchConfig& config, Xoshiro256ss& rng) {
    if (g.n() == 0 || config.step_budget <= 0) return start;
    return LocalSearch(g, config, rng).run(start);
}

Clique local_search_episode(const WeightedGraph& g, const LocalSearchConfig& config,
                            Xoshiro256ss& rng) {
    if (g.n() == 0) return {};
    auto alive = g.alive_vertices();
    VertexId seed = alive[rng.below(alive.size())];
    return local_search_improve(g, make_clique(g, {seed}), config, rng);
}

} // namespace mwc
