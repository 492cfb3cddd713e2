#include "tricl/degeneracy.hpp"

#include <cmath>
#include <set>

namespace tricl {

DegeneracyInfo degeneracy(const Graph& g) {
    const VertexId n = g.vertex_count();
    DegeneracyInfo info;
    info.order.reserve(n);
    info.position.assign(n, 0);
    info.alpha_ub_cn = arboricity_upper_bound(g);

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // one ordered set per residual degree; pop = lowest id in lowest nonempty bucket
    std::vector<std::set<VertexId>> buckets(max_deg + 1);
    for (VertexId v = 0; v < n; ++v) buckets[deg[v]].insert(v);
    std::vector<bool> removed(n, false);

    std::uint32_t min_d = 0;
    for (VertexId step = 0; step < n; ++step) {
        while (buckets[min_d].empty()) ++min_d;
        VertexId v = *buckets[min_d].begin();
        buckets[min_d].erase(buckets[min_d].begin());
        removed[v] = true;
        info.position[v] = step;
        info.order.push_back(v);
        info.d = std::max(info.d, deg[v]);
        for (VertexId w : g.neighbors(v)) {
            if (removed[w]) continue;
            buckets[deg[w]].erase(w);
            --deg[w];
            buckets[deg[w]].insert(w);
            if (deg[w] < min_d) min_d = deg[w];
        }
    }
    info.alpha_ub_degen = info.d;
    return info;
}

std::uint32_t arboricity_upper_bound(const Graph& g) {
    const std::uint64_t x = 2 * g.edge_count() + g.vertex_count();
    // smallest integer t with (2t)^2 >= x, starting from a float estimate
    std::uint64_t t = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)) / 2.0);
    while (t > 0 && 4 * (t - 1) * (t - 1) >= x) --t;
    while (4 * t * t < x) ++t;
    return static_cast<std::uint32_t>(t);
}

EdgeWork edge_work_functional(const Graph& g) {
    EdgeWork w;
    w.f.reserve(g.edge_count());
    g.for_each_edge([&](VertexId u, VertexId v) {
        std::uint32_t f = std::min(g.degree(u), g.degree(v));
        w.f.push_back(f);
        w.total += f;
    });
    return w;
}

}  // namespace tricl
