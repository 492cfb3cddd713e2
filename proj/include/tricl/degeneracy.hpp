#pragma once

#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <algorithm>
#include <vector>

namespace tricl {

// Vertex elimination order with the degeneracy d and the two computable
// arboricity upper bounds (alpha <= d and alpha <= ceil(sqrt(2m+n)/2)).
struct DegeneracyInfo {
    std::vector<VertexId> order;          // elimination order
    std::vector<std::uint32_t> position;  // position[v] = index of v in order
    std::uint32_t d = 0;
    std::uint32_t alpha_ub_cn = 0;
    std::uint32_t alpha_ub_degen = 0;     // == d

    std::uint32_t alpha_ub() const { return std::min(alpha_ub_cn, alpha_ub_degen); }
};

// Repeated minimum-degree elimination over a bucket queue; ties broken by
// lowest vertex id so the order is reproducible.
DegeneracyInfo degeneracy(const Graph& g);

// ceil(sqrt(2m + n) / 2), the smallest t with (2t)^2 >= 2m + n.
std::uint32_t arboricity_upper_bound(const Graph& g);

struct EdgeWork {
    std::vector<std::uint32_t> f;  // min endpoint degree, canonical edge order
    std::uint64_t total = 0;       // F = sum of f
};

EdgeWork edge_work_functional(const Graph& g);

}  // namespace tricl
