#include "mwc/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace mwc {

bool Clique::contains(VertexId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

WeightedGraph::WeightedGraph(std::vector<Weight> weights)
    : weight_(std::move(weights)),
      nbr_weight_(weight_),
      adj_(weight_.size()),
      alive_(weight_.size(), 1),
      n_alive_(weight_.size()) {
    for (Weight w : weight_) {
        if (w <= 0) throw std::invalid_argument("vertex weights must be positive");
    }
}

WeightedGraph::WeightedGraph(std::size_t n, Weight uniform_weight)
    : WeightedGraph(std::vector<Weight>(n, uniform_weight)) {}

void WeightedGraph::require_alive(VertexId v, const char* what) const {
    if (!alive(v)) {
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " is dead or out of range");
    }
}

void WeightedGraph::add_edge(VertexId u, VertexId v) {
    require_alive(u, "add_edge");
    require_alive(v, "add_edge");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) throw std::invalid_argument("add_edge: duplicate edge");
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    nbr_weight_[u] += weight_[v];
    nbr_weight_[v] += weight_[u];
    ++m_alive_;
}

Weight WeightedGraph::weight(VertexId v) const {
    require_alive(v, "weight");
    return weight_[v];
}

Weight WeightedGraph::neighborhood_weight(VertexId v) const {
    require_alive(v, "neighborhood_weight");
    return nbr_weight_[v];
}

std::size_t WeightedGraph::degree(VertexId v) const {
    require_alive(v, "degree");
    return adj_[v].size();
}

std::size_t WeightedGraph::max_degree() const {
    std::size_t d = 0;
    for (VertexId v = 0; v < adj_.size(); ++v)
        if (alive_[v]) d = std::max(d, adj_[v].size());
    return d;
}

std::span<const VertexId> WeightedGraph::neighbors(VertexId v) const {
    require_alive(v, "neighbors");
    return adj_[v];
}

bool WeightedGraph::is_adjacent(VertexId u, VertexId v) const {
    require_alive(u, "is_adjacent");
    require_alive(v, "is_adjacent");
    if (u == v) return false;
    const auto& smaller = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(smaller.begin(), smaller.end(), target);
}

std::vector<VertexId> WeightedGraph::neighborhood_intersection(VertexId u, VertexId v) const {
    require_alive(u, "neighborhood_intersection");
    require_alive(v, "neighborhood_intersection");
    std::vector<VertexId> out;
    std::set_intersection(adj_[u].begin(), adj_[u].end(), adj_[v].begin(), adj_[v].end(),
                          std::back_inserter(out));
    return out;
}

std::vector<VertexId> WeightedGraph::alive_vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_alive_);
    for (VertexId v = 0; v < alive_.size(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

void WeightedGraph::detach_edge_halves(VertexId u, VertexId v) {
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
}

void WeightedGraph::remove_vertex(VertexId v) {
    require_alive(v, "remove_vertex");
    for (VertexId u : adj_[v]) {
        auto& au = adj_[u];
        au.erase(std::lower_bound(au.begin(), au.end(), v));
        nbr_weight_[u] -= weight_[v];
    }
    m_alive_ -= adj_[v].size();
    adj_[v].clear();
    alive_[v] = 0;
    --n_alive_;
}

void WeightedGraph::remove_edge(VertexId u, VertexId v) {
    require_alive(u, "remove_edge");
    require_alive(v, "remove_edge");
    if (!is_adjacent(u, v)) throw std::invalid_argument("remove_edge: no such edge");
    detach_edge_halves(u, v);
    nbr_weight_[u] -= weight_[v];
    nbr_weight_[v] -= weight_[u];
    --m_alive_;
}

VertexId WeightedGraph::contract_twins(VertexId u, VertexId v) {
    require_alive(u, "contract_twins");
    require_alive(v, "contract_twins");
    // N[u] = N[v] means adjacent, equal degree, and N(u)\{v} = N(v)\{u}.
    if (!is_adjacent(u, v) || adj_[u].size() != adj_[v].size())
        throw std::invalid_argument("contract_twins: not twins");
    {
        auto iu = adj_[u].begin(), iv = adj_[v].begin();
        while (iu != adj_[u].end() && iv != adj_[v].end()) {
            if (*iu == v) { ++iu; continue; }
            if (*iv == u) { ++iv; continue; }
            if (*iu != *iv) throw std::invalid_argument("contract_twins: not twins");
            ++iu;
            ++iv;
        }
    }
    Weight wv = weight_[v];
    remove_vertex(v);
    add_weight(u, wv);
    return u;
}

void WeightedGraph::add_weight(VertexId v, Weight delta) {
    require_alive(v, "add_weight");
    if (weight_[v] + delta <= 0) throw std::invalid_argument("add_weight: weight must stay positive");
    weight_[v] += delta;
    nbr_weight_[v] += delta;
    for (VertexId u : adj_[v]) nbr_weight_[u] += delta;
}

bool WeightedGraph::validate_clique(const Clique& c) const {
    Weight total = 0;
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        VertexId v = c.members[i];
        if (!alive(v)) return false;
        if (i > 0 && c.members[i - 1] >= v) return false; // sorted, no duplicates
        total += weight_[v];
        for (std::size_t j = i + 1; j < c.members.size(); ++j)
            if (!is_adjacent(v, c.members[j])) return false;
    }
    return total == c.weight;
}

bool WeightedGraph::check_consistency() const {
    std::size_t n = 0, deg_sum = 0;
    for (VertexId v = 0; v < adj_.size(); ++v) {
        if (!alive_[v]) {
            if (!adj_[v].empty()) return false;
            continue;
        }
        ++n;
        if (weight_[v] <= 0) return false;
        Weight nw = weight_[v];
        VertexId prev = 0;
        bool first = true;
        for (VertexId u : adj_[v]) {
            if (u == v) return false;
            if (!first && u <= prev) return false;
            prev = u;
            first = false;
            if (!alive(u)) return false;
            if (!std::binary_search(adj_[u].begin(), adj_[u].end(), v)) return false;
            nw += weight_[u];
        }
        if (nw != nbr_weight_[v]) return false;
        deg_sum += adj_[v].size();
    }
    return n == n_alive_ && deg_sum == 2 * m_alive_;
}

CompactResult WeightedGraph::compact() const {
    CompactResult res;
    std::vector<VertexId> new_id(num_slots(), 0);
    std::vector<Weight> weights;
    for (VertexId v = 0; v < num_slots(); ++v) {
        if (!alive_[v]) continue;
        new_id[v] = static_cast<VertexId>(res.orig_ids.size());
        res.orig_ids.push_back(v);
        weights.push_back(weight_[v]);
    }
    res.graph = WeightedGraph(std::move(weights));
    for (VertexId v = 0; v < num_slots(); ++v) {
        if (!alive_[v]) continue;
        for (VertexId u : adj_[v])
            if (v < u) res.graph.add_edge(new_id[v], new_id[u]);
    }
    return res;
}

Clique make_clique(const WeightedGraph& g, std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    Clique c{std::move(members), 0};
    for (VertexId v : c.members) c.weight += g.weight(v);
    return c;
}

std::vector<VertexId> degeneracy_ordering(const WeightedGraph& g) {
    // Lazy min-heap on (current degree, id); stale entries are skipped.
    std::vector<std::size_t> deg(g.num_slots(), 0);
    std::vector<char> taken(g.num_slots(), 0);
    using Entry = std::pair<std::size_t, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (VertexId v = 0; v < g.num_slots(); ++v) {
        if (!g.alive(v)) continue;
        deg[v] = g.degree(v);
        heap.emplace(deg[v], v);
    }
    std::vector<VertexId> order;
    order.reserve(g.n());
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (taken[v] || d != deg[v]) continue;
        taken[v] = 1;
        order.push_back(v);
        for (VertexId u : g.neighbors(v)) {
            if (taken[u]) continue;
            --deg[u];
            heap.emplace(deg[u], u);
        }
    }
    return order;
}

} // namespace mwc
