#pragma once

#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace tricl {

// Graph H whose vertices are the K_j copies of a base graph; two copies are
// adjacent iff they are disjoint and their union induces a K_2j.
struct AuxiliaryGraph {
    std::uint32_t j = 1;
    std::vector<VertexId> h_vertex_members;  // flat, j ids per H-vertex, each strictly increasing
    Graph h_graph;

    std::uint64_t h_vertex_count() const { return h_vertex_members.size() / j; }

    std::span<const VertexId> members(VertexId h) const {
        return {h_vertex_members.data() + static_cast<std::size_t>(h) * j, j};
    }
};

// H-edges come from the K_2j copies directly: each copy contributes its
// C(2j,j)/2 complementary j-set pairs, so construction is output-linear.
AuxiliaryGraph build_auxiliary_graph(const Graph& g, std::uint32_t j,
                                     const Budgets& budgets = {});

// Resolved choice of split and overcount divisor for a composite method.
struct MethodPlan {
    std::uint32_t l = 0;
    std::pair<std::uint32_t, std::uint32_t> split;  // (l1, l2) extension; (j, i) triangle method
    BigCount multiplicity;                          // overcount divisor, >= 1
};

// Extension split; l1 defaults to l-3 for l > 5 (so the base case is the triangle
// lister) and to 2 otherwise.
MethodPlan plan_extension(std::uint32_t l, std::optional<std::uint32_t> l1 = std::nullopt);

// Balanced triangle-method split l = 3j + i; counting requires i == 0, with
// multiplicity (3j)! / ((j!)^3 * 3!).
MethodPlan plan_triangle_method(std::uint32_t l);

struct MethodResult {
    BigCount count;
    BigCount pre_division_total;
    MethodPlan plan;
    WorkCounter work;
};

// Counts K_l by enumerating K_l1 copies and recursively counting K_{l-l1} in each
// copy's common neighborhood; the accumulated total is divided by C(l, l1), and
// the division must come out exact.
MethodResult extension_count(const Graph& g, std::uint32_t l,
                             std::optional<std::uint32_t> l1 = std::nullopt,
                             const Budgets& budgets = {}, unsigned threads = 1);

// Counts K_3j as triangles of the auxiliary graph divided by the matching
// multiplicity; requires 3 | l.
MethodResult triangle_method_count(const Graph& g, std::uint32_t l,
                                   const Budgets& budgets = {});

// Witness search for K_l, l = 3j + i: a triangle in H when i == 0; otherwise
// iterate K_i copies and recurse on their common neighborhood. The returned
// tuple is canonical and verified pairwise-adjacent.
std::optional<std::vector<VertexId>> triangle_method_detect(const Graph& g, std::uint32_t l,
                                                            const Budgets& budgets = {});

// Detects K_4j by finding an H-edge whose common H-neighborhood spans another
// H-edge (a K_4 in H), then reassembling and verifying the K_4j witness.
std::optional<std::vector<VertexId>> edge_count_detect(const Graph& g, std::uint32_t j,
                                                       const Budgets& budgets = {});

}  // namespace tricl
