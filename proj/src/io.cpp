#include "mwc/io.hpp"

#include "mwc/rng.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mwc {

namespace {

std::string lower_ext(const std::string& path) {
    auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

// Collects edges with duplicate/self-loop/dangling checks, builds the graph
// at the end so adjacency comes out sorted in one pass.
struct EdgeCollector {
    std::size_t n;
    std::vector<std::pair<VertexId, VertexId>> edges;

    explicit EdgeCollector(std::size_t vertex_count) : n(vertex_count) {}

    // u, v are 1-based file ids
    void add(long long u, long long v, int line) {
        if (u < 1 || v < 1 || u > static_cast<long long>(n) || v > static_cast<long long>(n))
            throw ParseError("edge endpoint out of range", line);
        if (u == v) throw ParseError("self-loop", line);
        auto a = static_cast<VertexId>(u - 1);
        auto b = static_cast<VertexId>(v - 1);
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }

    void finish(WeightedGraph& g, int last_line) {
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i > 0 && edges[i] == edges[i - 1]) throw ParseError("duplicate edge", last_line);
            g.add_edge(edges[i].first, edges[i].second);
        }
    }
};

ParsedInstance parse_dimacs(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<Weight> weights;
    std::vector<char> weight_seen;
    EdgeCollector collector(0);
    bool any_weight = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0) throw ParseError("duplicate problem line", line_no);
            if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw ParseError("malformed problem line, expected 'p edge n m'", line_no);
            weights.assign(static_cast<std::size_t>(n), 1);
            weight_seen.assign(static_cast<std::size_t>(n), 0);
            collector.n = static_cast<std::size_t>(n);
        } else if (tag == "e") {
            if (n < 0) throw ParseError("edge before problem line", line_no);
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError("malformed edge line", line_no);
            collector.add(u, v, line_no);
        } else if (tag == "v" || tag == "n") {
            if (n < 0) throw ParseError("weight before problem line", line_no);
            long long i;
            Weight w;
            if (!(ls >> i >> w)) throw ParseError("malformed weight line", line_no);
            if (i < 1 || i > n) throw ParseError("weight vertex out of range", line_no);
            if (w <= 0) throw ParseError("weight must be positive", line_no);
            if (weight_seen[static_cast<std::size_t>(i - 1)])
                throw ParseError("duplicate weight line", line_no);
            weight_seen[static_cast<std::size_t>(i - 1)] = 1;
            weights[static_cast<std::size_t>(i - 1)] = w;
            any_weight = true;
        } else {
            throw ParseError("unknown line tag '" + tag + "'", line_no);
        }
    }
    if (n < 0) throw ParseError("missing problem line", line_no);
    if (static_cast<long long>(collector.edges.size()) != m)
        throw ParseError("edge count does not match header", line_no);
    ParsedInstance out{WeightedGraph(std::move(weights)), any_weight};
    collector.finish(out.graph, line_no);
    return out;
}

ParsedInstance parse_metis(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1, fmt = 0;
    std::vector<Weight> weights;
    std::vector<std::vector<long long>> adj;

    long long vertex = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '%') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError("malformed header, expected 'n m [fmt]'", line_no);
            if (!(ls >> fmt)) fmt = 0;
            if (fmt != 0 && fmt != 10)
                throw ParseError("unsupported fmt (only 0 and 10)", line_no);
            weights.assign(static_cast<std::size_t>(n), 1);
            adj.resize(static_cast<std::size_t>(n));
            continue;
        }
        if (vertex >= n) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw ParseError("more adjacency lines than vertices", line_no);
        }
        auto idx = static_cast<std::size_t>(vertex);
        if (fmt == 10) {
            Weight w;
            if (!(ls >> w)) throw ParseError("missing vertex weight", line_no);
            if (w <= 0) throw ParseError("weight must be positive", line_no);
            weights[idx] = w;
        }
        long long u;
        while (ls >> u) {
            if (u < 1 || u > n) throw ParseError("neighbor out of range", line_no);
            if (u == vertex + 1) throw ParseError("self-loop", line_no);
            adj[idx].push_back(u - 1);
        }
        ++vertex;
    }
    if (n < 0) throw ParseError("empty file", line_no);
    if (vertex != n) throw ParseError("fewer adjacency lines than vertices", line_no);

    long long edge_count = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        std::sort(adj[v].begin(), adj[v].end());
        for (std::size_t i = 0; i < adj[v].size(); ++i) {
            if (i > 0 && adj[v][i] == adj[v][i - 1])
                throw ParseError("duplicate neighbor of vertex " + std::to_string(v + 1), line_no);
            auto u = static_cast<std::size_t>(adj[v][i]);
            if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<long long>(v)))
                throw ParseError("asymmetric adjacency between " + std::to_string(v + 1) +
                                     " and " + std::to_string(adj[v][i] + 1),
                                 line_no);
        }
        edge_count += static_cast<long long>(adj[v].size());
    }
    if (edge_count != 2 * m) throw ParseError("edge count does not match header", line_no);

    ParsedInstance out{WeightedGraph(std::move(weights)), fmt == 10};
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (long long u : adj[v])
            if (static_cast<long long>(v) < u)
                out.graph.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(u));
    return out;
}

ParsedInstance parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::vector<std::pair<long long, long long>> raw;
    long long max_id = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#' || first[0] == '%') continue;
        long long u, v;
        try {
            u = std::stoll(first);
        } catch (...) {
            throw ParseError("malformed edge line", line_no);
        }
        if (!(ls >> v)) throw ParseError("malformed edge line", line_no);
        if (u < 1 || v < 1) throw ParseError("vertex ids must be positive", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        raw.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    ParsedInstance out{WeightedGraph(static_cast<std::size_t>(max_id), 1), false};
    EdgeCollector collector(static_cast<std::size_t>(max_id));
    for (auto [u, v] : raw) collector.add(u, v, line_no);
    collector.finish(out.graph, line_no);
    return out;
}

} // namespace

InstanceFormat detect_format(const std::string& path) {
    std::string ext = lower_ext(path);
    if (ext == "clq" || ext == "dimacs" || ext == "wclq" || ext == "col") return InstanceFormat::dimacs_clique;
    if (ext == "graph" || ext == "metis") return InstanceFormat::metis;
    return InstanceFormat::edge_list;
}

ParsedInstance parse_instance(std::istream& in, InstanceFormat format) {
    switch (format) {
    case InstanceFormat::dimacs_clique: return parse_dimacs(in);
    case InstanceFormat::metis: return parse_metis(in);
    case InstanceFormat::edge_list: return parse_edge_list(in);
    }
    throw std::logic_error("unreachable");
}

ParsedInstance parse_instance_file(const std::string& path, InstanceFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_instance(in, format);
}

ParsedInstance parse_instance_file(const std::string& path) {
    return parse_instance_file(path, detect_format(path));
}

void serialize_dimacs(const WeightedGraph& g, std::ostream& out) {
    if (g.n() != g.num_slots())
        throw std::invalid_argument("serialize_dimacs: graph must be compact");
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (VertexId v = 0; v < g.n(); ++v) out << "n " << v + 1 << " " << g.weight(v) << "\n";
    for (VertexId v = 0; v < g.n(); ++v)
        for (VertexId u : g.neighbors(v))
            if (v < u) out << "e " << v + 1 << " " << u + 1 << "\n";
}

void assign_weights(WeightedGraph& g, std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    for (VertexId v = 0; v < g.num_slots(); ++v) {
        if (!g.alive(v)) continue;
        Weight w = 1 + static_cast<Weight>(rng.below(200));
        g.add_weight(v, w - g.weight(v));
    }
}

} // namespace mwc
