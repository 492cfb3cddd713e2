#pragma once

#include "tricl/graph.hpp"

#include <iosfwd>
#include <string>

namespace tricl {

// Text format: '#' starts a comment line; the directive "# n <count>" pins the
// vertex count; every data line is "u v" in decimal. Without a directive, ids
// are re-indexed to a dense 0..n-1 range in sorted-id order.
struct ParseReport {
    VertexId n = 0;
    std::uint64_t edges_kept = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
    bool reindexed = false;
};

Graph parse_edge_list(std::istream& in, ParseReport* report = nullptr);
Graph load_edge_list(const std::string& path, ParseReport* report = nullptr);

// Emits "# n <count>" then each edge once as "u v" with u < v, lexicographic.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::string& path, const Graph& g);
std::string edge_list_string(const Graph& g);

}  // namespace tricl
