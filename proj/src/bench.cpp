#include "tricl/bench.hpp"

#include "tricl/bit_matrix.hpp"
#include "tricl/cliques.hpp"
#include "tricl/counting.hpp"
#include "tricl/degeneracy.hpp"
#include "tricl/report.hpp"
#include "tricl/triangles.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

namespace tricl {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Count + counters for one algorithm on one graph; the timer wraps the
// algorithm itself, not parsing or matrix setup.
void run_algo(const Graph& g, const std::string& algo, std::uint32_t l, const Budgets& budgets,
              BenchRecord& row) {
    auto t0 = std::chrono::steady_clock::now();
    if (algo == "hybrid" || algo == "matrix") {
        if (g.vertex_count() > budgets.matrix_max_n)
            throw capacity_error("n exceeds matrix-max-n");
        AdjMatrix m = build_adj_matrix(g);
        t0 = std::chrono::steady_clock::now();
        if (algo == "hybrid") {
            std::uint64_t c = 0;
            WorkCounter w = list_hybrid(g, m, [&](const Triangle&) { ++c; });
            row.count.value = c;
            row.inner_iterations = w.inner_iterations;
        } else {
            row.count.value = count_matrix_trace(g, m, budgets.matrix_max_n);
        }
        row.l = 3;
    } else if (algo == "cn" || algo == "ir" || algo == "edge-hash") {
        std::uint64_t c = 0;
        auto count = [&](const Triangle&) { ++c; };
        WorkCounter w = algo == "cn"   ? list_chiba_nishizeki(g, count)
                        : algo == "ir" ? list_itai_rodeh(g, count)
                                       : list_edge_iterator_hashed(g, count);
        row.count.value = c;
        row.inner_iterations = w.inner_iterations;
        row.l = 3;
    } else if (algo == "kclique") {
        CliqueCount c = count_k_cliques(g, l);
        row.count.value = c.count;
        row.inner_iterations = c.work.inner_iterations;
        row.l = l;
    } else if (algo == "extension") {
        MethodResult r = extension_count(g, l, std::nullopt, budgets);
        row.count = r.count;
        row.inner_iterations = r.work.inner_iterations;
        row.l = l;
    } else if (algo == "triangle-method") {
        MethodResult r = triangle_method_count(g, l, budgets);
        row.count = r.count;
        row.inner_iterations = r.work.inner_iterations;
        row.l = l;
    } else {
        throw contract_error("unknown bench algo: " + algo);
    }
    row.millis = elapsed_ms(t0);
}

}  // namespace

std::string BenchGraphSpec::id() const {
    char buf[128];
    if (model == "gnp")
        std::snprintf(buf, sizeof(buf), "gnp-n%u-p%g-s%llu", n, p,
                      static_cast<unsigned long long>(seed));
    else if (model == "lemma3")
        std::snprintf(buf, sizeof(buf), "lemma3-k%u-b%u", k, b);
    else
        std::snprintf(buf, sizeof(buf), "%s-n%u", model.c_str(), n);
    return buf;
}

Generated BenchGraphSpec::build() const {
    if (model == "complete") return gen_complete(n);
    if (model == "gnp") return gen_gnp(n, p, seed);
    if (model == "lemma3") return gen_lemma3(k, b);
    if (model == "cycle") return gen_cycle(n);
    if (model == "path") return gen_path(n);
    throw contract_error("unknown bench model: " + model);
}

std::vector<BenchRecord> run_bench(const std::vector<BenchGraphSpec>& graphs,
                                   const std::vector<std::string>& algos, std::uint32_t l,
                                   const Budgets& budgets, unsigned threads) {
    struct Cell {
        std::size_t gi;
        std::size_t ai;
    };
    std::vector<Cell> cells;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi)
        for (std::size_t ai = 0; ai < algos.size(); ++ai) cells.push_back({gi, ai});

    std::vector<BenchRecord> rows(cells.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        while (true) {
            std::size_t idx = cursor.fetch_add(1);
            if (idx >= cells.size()) return;
            const auto& [gi, ai] = cells[idx];
            BenchRecord& row = rows[idx];
            try {
                Generated gen = graphs[gi].build();
                const Graph& g = gen.graph;
                DegeneracyInfo deg = degeneracy(g);
                EdgeWork fw = edge_work_functional(g);
                row.graph_id = graphs[gi].id();
                row.model = graphs[gi].model;
                row.n = g.vertex_count();
                row.m = g.edge_count();
                row.d = deg.d;
                row.alpha_ub = deg.alpha_ub();
                row.F = fw.total;
                row.algo = algos[ai];
                row.l = l;
                run_algo(g, algos[ai], l, budgets, row);
            } catch (const capacity_error&) {
                row.graph_id = graphs[gi].id();
                row.model = graphs[gi].model;
                row.algo = algos[ai];
                row.status = "error:capacity";
            } catch (const std::exception&) {
                row.graph_id = graphs[gi].id();
                row.model = graphs[gi].model;
                row.algo = algos[ai];
                row.status = "error:internal";
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return rows;  // already in grid order
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
    out << kBenchCsvHeader << "\n";
    for (const auto& r : rows) {
        out << r.graph_id << "," << r.model << "," << r.n << "," << r.m << "," << r.d << ","
            << r.alpha_ub << "," << r.F << "," << r.algo << "," << r.l << ","
            << u128_to_string(r.count.value) << "," << r.inner_iterations << "," << r.millis << ","
            << r.status << "\n";
    }
}

}  // namespace tricl
