#include "tricl/bit_matrix.hpp"

namespace tricl {

AdjMatrix build_adj_matrix(const Graph& g) {
    AdjMatrix m(g.vertex_count());
    g.for_each_edge([&](VertexId u, VertexId v) { m.set_edge(u, v); });
    return m;
}

}  // namespace tricl
