#include "mwc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwc {

namespace {

struct Enumerator {
    const WeightedGraph& g;
    std::vector<VertexId> current;
    Weight current_weight = 0;
    Clique best;

    void expand(const std::vector<VertexId>& candidates) {
        Weight remaining = 0;
        for (VertexId v : candidates) remaining += g.weight(v);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (current_weight + remaining <= best.weight) return;
            VertexId v = candidates[i];
            remaining -= g.weight(v);
            current.push_back(v);
            current_weight += g.weight(v);
            if (current_weight > best.weight) best = Clique{current, current_weight};
            std::vector<VertexId> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g.is_adjacent(v, candidates[j])) next.push_back(candidates[j]);
            if (!next.empty()) expand(next);
            current.pop_back();
            current_weight -= g.weight(v);
        }
    }
};

} // namespace

Clique brute_force_opt(const WeightedGraph& g, const std::vector<VertexId>& subset) {
    if (subset.size() > 35) throw std::invalid_argument("brute_force_opt: more than 35 vertices");
    std::vector<VertexId> candidates = subset;
    std::sort(candidates.begin(), candidates.end());
    Enumerator e{g, {}, 0, {}};
    e.expand(candidates);
    std::sort(e.best.members.begin(), e.best.members.end());
    return e.best;
}

Clique brute_force_opt(const WeightedGraph& g) {
    return brute_force_opt(g, g.alive_vertices());
}

} // namespace mwc
