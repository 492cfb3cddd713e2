#include "tricl/graph.hpp"

#include <algorithm>

namespace tricl {

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges, BuildStats* stats) {
    BuildStats local;
    std::vector<Edge> kept;
    kept.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n)
            throw malformed_input_error("vertex id " + std::to_string(std::max(e.u, e.v)) +
                                        " out of range for n=" + std::to_string(n));
        if (e.u == e.v) {
            ++local.self_loops_dropped;
            continue;
        }
        kept.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(kept.begin(), kept.end(),
              [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    auto last = std::unique(kept.begin(), kept.end(), [](const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    });
    local.duplicate_edges_dropped = static_cast<std::uint64_t>(kept.end() - last);
    kept.erase(last, kept.end());

    Graph g;
    g.n_ = n;
    g.m_ = kept.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : kept) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adj_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : kept) {
        g.adj_[cursor[e.u]++] = e.v;
        g.adj_[cursor[e.v]++] = e.u;
    }
    // kept is sorted by (u,v), so each row u receives its v-neighbors in order;
    // the v-rows receive u-neighbors in increasing u as well
    if (stats) *stats = local;
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> edges_of(const Graph& g) {
    std::vector<Edge> out;
    out.reserve(g.edge_count());
    g.for_each_edge([&](VertexId u, VertexId v) { out.push_back({u, v}); });
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    const auto local = [&](VertexId v) {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        return static_cast<VertexId>(it - vertices.begin());
    };
    std::vector<Edge> edges;
    for (VertexId i = 0; i < vertices.size(); ++i) {
        VertexId v = vertices[i];
        auto nb = g.neighbors(v);
        // merge nb against vertices, keep w > v to add each edge once
        auto a = nb.begin();
        auto b = vertices.begin();
        while (a != nb.end() && b != vertices.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                if (*a > v) edges.push_back({i, local(*a)});
                ++a;
                ++b;
            }
        }
    }
    return Graph::from_edges(static_cast<VertexId>(vertices.size()), edges);
}

bool is_clique(const Graph& g, std::span<const VertexId> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

}  // namespace tricl
