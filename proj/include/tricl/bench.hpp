#pragma once

#include "tricl/generators.hpp"
#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tricl {

// One graph of the benchmark grid. Which fields matter depends on the model.
struct BenchGraphSpec {
    std::string model;  // complete | gnp | lemma3 | cycle | path
    VertexId n = 0;
    double p = 0.0;
    std::uint32_t k = 0;
    std::uint32_t b = 0;
    std::uint64_t seed = 0;

    std::string id() const;
    Generated build() const;
};

struct BenchRecord {
    std::string graph_id;
    std::string model;
    VertexId n = 0;
    std::uint64_t m = 0;
    std::uint32_t d = 0;
    std::uint32_t alpha_ub = 0;  // min(ceil(sqrt(2m+n)/2), d)
    std::uint64_t F = 0;
    std::string algo;
    std::uint32_t l = 3;
    BigCount count;
    std::uint64_t inner_iterations = 0;
    double millis = 0.0;
    std::string status = "ok";  // or error:<kind>
};

inline constexpr const char* kBenchCsvHeader =
    "graph_id,model,n,m,d,alpha_ub,F,algo,l,count,inner_iterations,millis,status";

// One row per (graph, algo), in grid order. Rows run concurrently up to
// `threads`; failures land in the status column and the run continues.
std::vector<BenchRecord> run_bench(const std::vector<BenchGraphSpec>& graphs,
                                   const std::vector<std::string>& algos, std::uint32_t l,
                                   const Budgets& budgets = {}, unsigned threads = 1);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

}  // namespace tricl
