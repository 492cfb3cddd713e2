#include "tricl/triangles.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace tricl {

WorkCounter list_hybrid(const Graph& g, const AdjMatrix& m, const TriangleSink& sink) {
    if (m.dimension() != g.vertex_count())
        throw contract_error("adjacency matrix dimension does not match graph");
    WorkCounter work;
    g.for_each_edge([&](VertexId i, VertexId j) {
        VertexId x, y;
        if (g.degree(i) <= g.degree(j)) {
            x = i;
            y = j;
        } else {
            x = j;
            y = i;
        }
        for (VertexId k : g.neighbors(x)) {
            ++work.inner_iterations;
            if (j < k) {
                ++work.edge_probes;
                if (m.test(y, k)) sink({i, j, k});
            }
        }
    });
    return work;
}

WorkCounter list_chiba_nishizeki(const Graph& g, const TriangleSink& sink) {
    const VertexId n = g.vertex_count();
    WorkCounter work;
    if (n < 3) return work;

    std::vector<VertexId> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::sort(by_degree.begin(), by_degree.end(), [&](VertexId a, VertexId b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });

    std::vector<bool> removed(n, false);
    std::vector<bool> marked(n, false);
    for (VertexId step = 0; step + 2 < n; ++step) {
        VertexId u = by_degree[step];
        for (VertexId v : g.neighbors(u))
            if (!removed[v]) marked[v] = true;
        for (VertexId v : g.neighbors(u)) {
            if (removed[v]) continue;
            for (VertexId w : g.neighbors(v)) {
                if (removed[w]) continue;
                ++work.inner_iterations;
                if (marked[w]) {
                    VertexId t[3] = {u, v, w};
                    std::sort(std::begin(t), std::end(t));
                    sink({t[0], t[1], t[2]});
                }
            }
            marked[v] = false;  // kills the mirrored (w, v) report within this u
        }
        removed[u] = true;  // deletion simulated by skip
    }
    return work;
}

WorkCounter list_itai_rodeh(const Graph& g, const TriangleSink& sink) {
    const VertexId n = g.vertex_count();
    WorkCounter work;

    // residual adjacency, mutated as tree edges are deleted
    std::vector<std::vector<VertexId>> adj(n);
    for (VertexId v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        adj[v].assign(nb.begin(), nb.end());
    }
    std::uint64_t residual_edges = g.edge_count();

    std::set<std::array<VertexId, 3>> seen;
    std::vector<VertexId> stack;
    std::vector<bool> visited(n, false);
    std::vector<std::pair<VertexId, VertexId>> tree;

    while (residual_edges > 0) {
        // spanning forest by iterative DFS from the lowest-id unvisited vertex
        std::fill(visited.begin(), visited.end(), false);
        tree.clear();
        for (VertexId root = 0; root < n; ++root) {
            if (visited[root]) continue;
            visited[root] = true;
            stack.push_back(root);
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (VertexId w : adj[v]) {
                    if (visited[w]) continue;
                    visited[w] = true;
                    tree.emplace_back(v, w);
                    stack.push_back(w);
                }
            }
        }

        // triangles with at least one tree edge, intersected in the residual graph
        for (auto [u, v] : tree) {
            const auto& a = adj[u];
            const auto& b = adj[v];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                ++work.inner_iterations;
                if (a[i] < b[j]) {
                    ++i;
                } else if (b[j] < a[i]) {
                    ++j;
                } else {
                    std::array<VertexId, 3> t = {u, v, a[i]};
                    std::sort(t.begin(), t.end());
                    if (seen.insert(t).second) sink({t[0], t[1], t[2]});
                    ++i;
                    ++j;
                }
            }
        }

        for (auto [u, v] : tree) {
            auto& a = adj[u];
            a.erase(std::lower_bound(a.begin(), a.end(), v));
            auto& b = adj[v];
            b.erase(std::lower_bound(b.begin(), b.end(), u));
        }
        residual_edges -= tree.size();
    }
    return work;
}

WorkCounter list_edge_iterator_hashed(const Graph& g, const TriangleSink& sink) {
    const VertexId n = g.vertex_count();
    WorkCounter work;
    std::vector<std::unordered_set<VertexId>> member(n);
    for (VertexId v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        member[v].insert(nb.begin(), nb.end());
    }
    g.for_each_edge([&](VertexId u, VertexId v) {
        VertexId small = g.degree(u) <= g.degree(v) ? u : v;
        VertexId large = small == u ? v : u;
        for (VertexId w : g.neighbors(small)) {
            ++work.inner_iterations;
            if (w <= v) continue;
            ++work.edge_probes;
            if (member[large].count(w)) sink({u, v, w});
        }
    });
    return work;
}

std::uint64_t count_matrix_trace(const Graph& g, const AdjMatrix& m, std::uint32_t matrix_max_n) {
    if (g.vertex_count() > matrix_max_n)
        throw capacity_error("matrix counting refused: n=" + std::to_string(g.vertex_count()) +
                             " exceeds matrix-max-n=" + std::to_string(matrix_max_n));
    if (m.dimension() != g.vertex_count())
        throw contract_error("adjacency matrix dimension does not match graph");
    std::uint64_t trace = 0;
    g.for_each_edge([&](VertexId u, VertexId v) { trace += 2 * and_popcount(m.row(u), m.row(v)); });
    if (trace % 6 != 0) throw consistency_error("trace(M^3) not divisible by 6");
    return trace / 6;
}

std::vector<Triangle> brute_force_triangles(const Graph& g, std::uint32_t guard_n) {
    const VertexId n = g.vertex_count();
    if (n > guard_n)
        throw capacity_error("triangle oracle refused: n=" + std::to_string(n) + " exceeds guard " +
                             std::to_string(guard_n));
    std::vector<Triangle> out;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (VertexId k = j + 1; k < n; ++k)
                if (g.has_edge(i, k) && g.has_edge(j, k)) out.push_back({i, j, k});
        }
    }
    return out;
}

std::string triangle_stream_string(std::vector<Triangle> triangles) {
    std::sort(triangles.begin(), triangles.end());
    std::ostringstream ss;
    for (const Triangle& t : triangles) ss << t.i << " " << t.j << " " << t.k << "\n";
    return ss.str();
}

}  // namespace tricl
