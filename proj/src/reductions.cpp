#include "mwc/reductions.hpp"

#include <algorithm>

namespace mwc {

namespace {

void note(std::vector<VertexId>* touched, VertexId v) {
    if (touched) touched->push_back(v);
}

void note_all(std::vector<VertexId>* touched, std::span<const VertexId> vs) {
    if (touched) touched->insert(touched->end(), vs.begin(), vs.end());
}

// argmax of neighbor weight, smallest id on ties
VertexId heaviest_neighbor(const WeightedGraph& g, VertexId v) {
    VertexId best = g.neighbors(v).front();
    Weight best_w = g.weight(best);
    for (VertexId u : g.neighbors(v)) {
        Weight wu = g.weight(u);
        if (wu > best_w) {
            best = u;
            best_w = wu;
        }
    }
    return best;
}

Weight intersection_weight(const WeightedGraph& g, VertexId u, VertexId v) {
    Weight total = 0;
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    auto iu = nu.begin();
    auto iv = nv.begin();
    while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) ++iu;
        else if (*iv < *iu) ++iv;
        else {
            total += g.weight(*iu);
            ++iu;
            ++iv;
        }
    }
    return total;
}

// N(v) ⊆ N(u), both sorted; `skip` is dropped from v's side (used for N[u]).
bool neighbors_subset_of(const WeightedGraph& g, VertexId v, VertexId u, VertexId skip) {
    auto nv = g.neighbors(v), nu = g.neighbors(u);
    auto iv = nv.begin();
    auto iu = nu.begin();
    while (iv != nv.end()) {
        if (*iv == skip) { ++iv; continue; }
        while (iu != nu.end() && *iu < *iv) ++iu;
        if (iu == nu.end() || *iu != *iv) return false;
        ++iv;
    }
    return true;
}

} // namespace

bool reduce_neighborhood_weight(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                const BestClique& best, std::vector<VertexId>* touched) {
    if (g.neighborhood_weight(v) > best.weight()) return false;
    note_all(touched, g.neighbors(v));
    g.remove_vertex(v);
    trace.push_back({ReductionEvent::Kind::vertex_removed, v, 0});
    return true;
}

bool reduce_largest_weight_neighbor(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                    const BestClique& best, std::vector<VertexId>* touched) {
    if (g.degree(v) == 0 || best.contains(v)) return false;
    VertexId u = heaviest_neighbor(g, v);
    Weight excluding = g.neighborhood_weight(v) - g.weight(u);
    Weight including = g.weight(v) + g.weight(u) + intersection_weight(g, v, u);
    if (std::max(excluding, including) > best.weight()) return false;
    note_all(touched, g.neighbors(v));
    g.remove_vertex(v);
    trace.push_back({ReductionEvent::Kind::vertex_removed, v, 0});
    return true;
}

bool reduce_twin(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                 std::vector<VertexId>* touched) {
    std::size_t dv = g.degree(v);
    for (VertexId u : g.neighbors(v)) {
        if (g.degree(u) != dv) continue;
        // N[u] = N[v] iff adjacent (they are), equal degree, N(v)\{u} ⊆ N(u)
        if (!neighbors_subset_of(g, v, u, u)) continue;
        VertexId survivor = std::min(u, v);
        VertexId absorbed = std::max(u, v);
        g.contract_twins(survivor, absorbed);
        trace.push_back({ReductionEvent::Kind::twin_contracted, survivor, absorbed});
        note(touched, survivor);
        note_all(touched, g.neighbors(survivor));
        return true;
    }
    return false;
}

bool reduce_domination_nonadjacent(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                   std::vector<VertexId>* touched) {
    if (g.degree(v) == 0) return false;
    // scan the two-hop neighborhood through the lowest-degree neighbor of v
    VertexId x = g.neighbors(v).front();
    for (VertexId c : g.neighbors(v)) {
        if (g.degree(c) < g.degree(x) || (g.degree(c) == g.degree(x) && c < x)) x = c;
    }
    std::size_t dv = g.degree(v);
    Weight wv = g.weight(v);
    for (VertexId u : g.neighbors(x)) {
        if (u == v || g.degree(u) < dv || g.weight(u) < wv) continue;
        if (g.is_adjacent(u, v)) continue;
        // mutually dominating equal-weight pair: the larger id goes
        if (g.weight(u) == wv && g.degree(u) == dv && u > v) continue;
        if (!neighbors_subset_of(g, v, u, static_cast<VertexId>(-1))) continue;
        note_all(touched, g.neighbors(v));
        g.remove_vertex(v);
        trace.push_back({ReductionEvent::Kind::vertex_removed, v, 0});
        return true;
    }
    return false;
}

bool reduce_domination_adjacent(WeightedGraph& g, ReductionTrace& trace, VertexId u, VertexId v,
                                std::vector<VertexId>* touched) {
    if (!g.is_adjacent(u, v)) return false;
    if (!neighbors_subset_of(g, v, u, u)) return false; // N(v) ⊆ N[u]
    note(touched, v);
    note(touched, u);
    note_all(touched, g.neighbors(v));
    g.add_weight(v, g.weight(u));
    g.remove_edge(u, v);
    // transfer first: reconstruction must see it when deciding to add u
    trace.push_back({ReductionEvent::Kind::weight_transferred, v, u});
    trace.push_back({ReductionEvent::Kind::edge_removed, u, v});
    return true;
}

bool reduce_domination_adjacent_at(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                                   std::vector<VertexId>* touched) {
    std::size_t dv = g.degree(v);
    for (VertexId u : g.neighbors(v)) {
        if (g.degree(u) + 1 < dv) continue; // |N(v)| <= |N[u]| needed
        if (reduce_domination_adjacent(g, trace, u, v, touched)) return true;
    }
    return false;
}

int reduce_edge_bounding(WeightedGraph& g, ReductionTrace& trace, VertexId v,
                         const BestClique& best, std::vector<VertexId>* touched) {
    std::vector<VertexId> to_cut;
    for (VertexId u : g.neighbors(v)) {
        Weight ub_inc = g.weight(v) + g.weight(u) + intersection_weight(g, v, u);
        if (ub_inc < best.weight()) to_cut.push_back(u); // strict, per the rule
    }
    for (VertexId u : to_cut) {
        g.remove_edge(v, u);
        trace.push_back({ReductionEvent::Kind::edge_removed, v, u});
        note(touched, u);
    }
    if (!to_cut.empty()) {
        note(touched, v);
        note_all(touched, g.neighbors(v));
    }
    return static_cast<int>(to_cut.size());
}

bool reduce_simplicial(WeightedGraph& g, ReductionTrace& trace, VertexId v, BestClique& best,
                       std::vector<VertexId>* touched) {
    auto nv = g.neighbors(v);
    for (std::size_t i = 0; i < nv.size(); ++i)
        for (std::size_t j = i + 1; j < nv.size(); ++j)
            if (!g.is_adjacent(nv[i], nv[j])) return false;
    if (g.neighborhood_weight(v) > best.weight()) {
        std::vector<VertexId> closed(nv.begin(), nv.end());
        closed.push_back(v);
        // lift through the trace so far; contracted vertices expand back
        best.maybe_adopt(reconstruct(trace, make_clique(g, std::move(closed))));
    }
    note_all(touched, nv);
    g.remove_vertex(v);
    trace.push_back({ReductionEvent::Kind::simplicial_removed, v, 0});
    return true;
}

} // namespace mwc
