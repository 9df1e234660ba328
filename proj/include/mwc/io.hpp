#ifndef MWC_IO_HPP
#define MWC_IO_HPP

#include "mwc/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace mwc {

enum class InstanceFormat { dimacs_clique, metis, edge_list };

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

// Picks a format from the file extension: .clq/.dimacs/.wclq -> DIMACS,
// .graph/.metis -> METIS, anything else -> edge list.
InstanceFormat detect_format(const std::string& path);

struct ParsedInstance {
    WeightedGraph graph;
    bool has_weights = false; // the file carried explicit vertex weights
};

// DIMACS clique format: "p edge n m" header, "e u v" edges (1-based),
// optional "v i w" / "n i w" vertex weights. METIS: "n m [fmt]" header with
// fmt 0 or 10, one adjacency line per vertex. Edge list: "u v" per line,
// 1-based, vertex count implied by the largest id. Unweighted files get
// weight 1. Malformed headers, duplicate edges, self-loops, non-positive
// weights and dangling endpoints raise ParseError with the line number.
ParsedInstance parse_instance(std::istream& in, InstanceFormat format);
ParsedInstance parse_instance_file(const std::string& path, InstanceFormat format);
ParsedInstance parse_instance_file(const std::string& path);

// Writes DIMACS clique format with explicit weight lines; the graph must be
// compact (no dead vertices).
void serialize_dimacs(const WeightedGraph& g, std::ostream& out);

// Replaces every vertex weight with an integer drawn uniformly from
// [1, 200], from a xoshiro256** stream seeded via SplitMix64 with `seed`.
// Draw order is ascending vertex id: w(v) = 1 + (next() mod 200).
void assign_weights(WeightedGraph& g, std::uint64_t seed);

} // namespace mwc

#endif
