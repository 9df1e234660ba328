#ifndef MWC_GRAPH_HPP
#define MWC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mwc {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

// A clique is carried around as a sorted member list plus its cached weight.
struct Clique {
    std::vector<VertexId> members;
    Weight weight = 0;

    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }
    bool contains(VertexId v) const;
};

// Mutable vertex-weighted undirected graph. Vertex ids are dense and stable:
// deleted vertices are tombstoned, never renumbered (compact() produces a
// renumbered copy). Adjacency is kept as sorted vectors of alive neighbors,
// so iteration order is deterministic and set operations run as merges.
// The closed-neighborhood weight w(N[v]) is cached and maintained by every
// mutation. Weights are strictly positive.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::vector<Weight> weights);
    explicit WeightedGraph(std::size_t n, Weight uniform_weight = 1);

    // Build-phase edge insertion; keeps neighbor lists sorted. Throws on
    // self-loops, duplicate edges, and dead or out-of-range endpoints.
    void add_edge(VertexId u, VertexId v);

    std::size_t num_slots() const { return weight_.size(); }
    std::size_t n() const { return n_alive_; }
    std::size_t m() const { return m_alive_; }
    bool alive(VertexId v) const { return v < alive_.size() && alive_[v]; }

    Weight weight(VertexId v) const;
    // w(N[v]) = w(v) + sum of neighbor weights, cached.
    Weight neighborhood_weight(VertexId v) const;
    std::size_t degree(VertexId v) const;
    std::size_t max_degree() const;

    std::span<const VertexId> neighbors(VertexId v) const;
    bool is_adjacent(VertexId u, VertexId v) const;
    // N(u) ∩ N(v) over alive vertices, sorted. Merge of the two sorted lists.
    std::vector<VertexId> neighborhood_intersection(VertexId u, VertexId v) const;
    std::vector<VertexId> alive_vertices() const;

    void remove_vertex(VertexId v);
    void remove_edge(VertexId u, VertexId v);
    // Requires N[u] = N[v]; u survives with weight w(u)+w(v), v dies.
    VertexId contract_twins(VertexId u, VertexId v);
    // Adds delta to w(v) and fixes all affected w(N[.]) caches.
    void add_weight(VertexId v, Weight delta);

    bool validate_clique(const Clique& c) const;

    // Full recomputation of every invariant; test and debug hook.
    bool check_consistency() const;

    bool operator==(const WeightedGraph& other) const = default;

    // Renumbers alive vertices to 0..n-1 (ascending by old id).
    struct CompactResult compact() const;

private:
    void require_alive(VertexId v, const char* what) const;
    void detach_edge_halves(VertexId u, VertexId v);

    std::vector<Weight> weight_;
    std::vector<Weight> nbr_weight_; // cached w(N[v])
    std::vector<std::vector<VertexId>> adj_;
    std::vector<char> alive_;
    std::size_t n_alive_ = 0;
    std::size_t m_alive_ = 0;
};

struct CompactResult {
    WeightedGraph graph;
    std::vector<VertexId> orig_ids; // new id -> old id
};

Clique make_clique(const WeightedGraph& g, std::vector<VertexId> members);

// Min-degree peeling order: each vertex has minimum degree in the subgraph
// induced by itself and its successors; ties broken by smallest id.
std::vector<VertexId> degeneracy_ordering(const WeightedGraph& g);

} // namespace mwc

#endif
