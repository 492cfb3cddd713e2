#pragma once

#include "tricl/types.hpp"

#include <span>
#include <vector>

namespace tricl {

struct BuildStats {
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
};

// Immutable undirected simple graph in compressed sparse row form.
// Invariants: no self loops, no parallel edges, every adjacency list strictly
// increasing, adjacency symmetric, sum of degrees == 2m.
class Graph {
public:
    Graph() = default;

    // Canonicalizing constructor: self loops are dropped, duplicate edges merged
    // (counts reported through stats), adjacency sorted. Ids must be < n.
    static Graph from_edges(VertexId n, std::span<const Edge> edges, BuildStats* stats = nullptr);

    VertexId vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::uint32_t degree(VertexId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(VertexId u, VertexId v) const;

    // Visits each edge exactly once as (u, v) with u < v, in lexicographic order.
    template <typename Fn>
    void for_each_edge(Fn&& fn) const {
        for (VertexId u = 0; u < n_; ++u) {
            for (VertexId v : neighbors(u))
                if (v > u) fn(u, v);
        }
    }

    bool operator==(const Graph&) const = default;

private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;  // n_ + 1 entries
    std::vector<VertexId> adj_;           // 2 m_ entries
};

// Canonical edge list (u < v, lexicographic).
std::vector<Edge> edges_of(const Graph& g);

// Induced subgraph on `vertices` (must be sorted, strictly increasing). Vertex i of
// the result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

// True iff every pair of `vertices` is adjacent in g.
bool is_clique(const Graph& g, std::span<const VertexId> vertices);

}  // namespace tricl
