#pragma once

#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tricl {

// Receives each clique as a strictly increasing id tuple. The span is only valid
// for the duration of the call.
using CliqueSink = std::function<void(std::span<const VertexId>)>;

// Lists every K_l exactly once by walking the degeneracy-order DAG: each root
// vertex explores only its later-ordered neighbors (at most d of them), so the
// work is O(m * d^(l-2)). l=1 emits vertices, l=2 edges, l > n nothing.
//
// With threads > 1 the root loop is partitioned into contiguous ranges; the
// merged stream and counters are identical to a single-threaded run.
WorkCounter list_k_cliques(const Graph& g, std::uint32_t l, const CliqueSink& sink,
                           unsigned threads = 1);

// Count-only variant; avoids materializing cliques in parallel runs.
struct CliqueCount {
    std::uint64_t count = 0;
    WorkCounter work;
};
CliqueCount count_k_cliques(const Graph& g, std::uint32_t l, unsigned threads = 1);

// Exhaustive combination scan. Refuses when C(n,l) exceeds the tuple budget.
std::uint64_t brute_force_k_cliques(const Graph& g, std::uint32_t l,
                                    const Budgets& budgets = {});

// Materialized stream as flat tuples, l ids per clique, in emission order.
std::vector<VertexId> collect_k_cliques(const Graph& g, std::uint32_t l, unsigned threads = 1);

// One line of l space-separated ids per clique, sorted lexicographically.
std::string clique_stream_string(std::vector<VertexId> flat, std::uint32_t l);

}  // namespace tricl
