#pragma once

#include "tricl/bit_matrix.hpp"
#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace tricl {

// Canonical triangle: i < j < k, all three edges present in the source graph.
struct Triangle {
    VertexId i, j, k;

    friend bool operator==(const Triangle&, const Triangle&) = default;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

using TriangleSink = std::function<void(const Triangle&)>;

// Edge-iterator over the adjacency list of the lower-degree endpoint, closing the
// third edge through the bit matrix. Each triangle is reported exactly once, while
// its lexicographically smallest edge is processed; emission order is sorted.
// inner_iterations lands exactly on F(G).
WorkCounter list_hybrid(const Graph& g, const AdjMatrix& m, const TriangleSink& sink);

// Vertex-iterator: process vertices by nonincreasing degree, mark the current
// vertex's neighborhood, scan neighbors-of-neighbors, then delete the vertex.
WorkCounter list_chiba_nishizeki(const Graph& g, const TriangleSink& sink);

// Repeatedly: build a spanning forest per component, list triangles through tree
// edges against the residual graph, delete the tree edges. Output is deduplicated
// through a canonical-triple set.
WorkCounter list_itai_rodeh(const Graph& g, const TriangleSink& sink);

// Edge-iterator intersecting the smaller neighborhood against a hash set of the
// larger; emits w only when w > v. edge_probes counts membership tests.
WorkCounter list_edge_iterator_hashed(const Graph& g, const TriangleSink& sink);

// trace(M^3) / 6 with packed-bit row AND + popcount. Refuses above matrix_max_n.
std::uint64_t count_matrix_trace(const Graph& g, const AdjMatrix& m,
                                 std::uint32_t matrix_max_n = Budgets{}.matrix_max_n);

// Exhaustive i<j<k scan. The oracle the listing algorithms are validated against.
std::vector<Triangle> brute_force_triangles(const Graph& g,
                                            std::uint32_t guard_n = Budgets{}.brute_triangle_max_n);

// Convenience: run a lister and materialize its stream.
template <typename Lister, typename... Args>
std::vector<Triangle> collect_triangles(Lister&& lister, Args&&... args) {
    std::vector<Triangle> out;
    lister(std::forward<Args>(args)..., [&](const Triangle& t) { out.push_back(t); });
    return out;
}

// "i j k" per line, canonical order, sorted lexicographically.
std::string triangle_stream_string(std::vector<Triangle> triangles);

}  // namespace tricl
