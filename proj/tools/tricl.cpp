#include "tricl/bench.hpp"
#include "tricl/bit_matrix.hpp"
#include "tricl/cliques.hpp"
#include "tricl/counting.hpp"
#include "tricl/degeneracy.hpp"
#include "tricl/edgelist.hpp"
#include "tricl/generators.hpp"
#include "tricl/report.hpp"
#include "tricl/triangles.hpp"
#include "tricl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace tricl;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct GenerateArgs {
    std::string model;
    std::uint32_t n = 0, n1 = 0, n2 = 0, k = 0, b = 0, n_pad = 0;
    std::uint64_t m = 0, seed = 0;
    double p = 0.0;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    Generated gen;
    if (a.model == "lemma2") {
        gen = gen_lemma2(a.n, a.m);
    } else if (a.model == "lemma3") {
        gen = gen_lemma3(a.k, a.b, a.n_pad);
    } else if (a.model == "complete") {
        gen = gen_complete(a.n);
    } else if (a.model == "complete-bipartite") {
        gen = gen_complete_bipartite(a.n1, a.n2);
    } else if (a.model == "cycle") {
        gen = gen_cycle(a.n);
    } else if (a.model == "path") {
        gen = gen_path(a.n);
    } else if (a.model == "gnp") {
        gen = gen_gnp(a.n, a.p, a.seed);
    } else {
        throw contract_error("unknown model: " + a.model);
    }

    const std::string el_path = a.out + ".el";
    const std::string cert_path = a.out + ".cert.json";
    save_edge_list(el_path, gen.graph);
    std::ofstream cert(cert_path);
    if (!cert) throw malformed_input_error("cannot write " + cert_path);
    cert << gen.cert.to_json().dump(2) << "\n";

    nlohmann::json j{{"edge_list", el_path},
                     {"certificate", cert_path},
                     {"n", gen.graph.vertex_count()},
                     {"m", gen.graph.edge_count()}};
    std::cout << j.dump() << "\n";
    return 0;
}

int cmd_list(const std::string& algo, std::uint32_t l, const std::string& input,
             const std::string& out, const Budgets& budgets, unsigned threads) {
    Graph g = load_edge_list(input);
    std::string stream;
    if (algo == "kclique") {
        stream = clique_stream_string(collect_k_cliques(g, l, threads), l);
    } else {
        if (l != 3) throw contract_error("triangle listers require --l 3");
        std::vector<Triangle> tris;
        TriangleSink sink = [&](const Triangle& t) { tris.push_back(t); };
        if (algo == "hybrid") {
            if (g.vertex_count() > budgets.matrix_max_n)
                throw capacity_error("n exceeds matrix-max-n");
            AdjMatrix m = build_adj_matrix(g);
            list_hybrid(g, m, sink);
        } else if (algo == "cn") {
            list_chiba_nishizeki(g, sink);
        } else if (algo == "ir") {
            list_itai_rodeh(g, sink);
        } else if (algo == "edge-hash") {
            list_edge_iterator_hashed(g, sink);
        } else {
            throw contract_error("unknown list algo: " + algo);
        }
        stream = triangle_stream_string(std::move(tris));
    }
    if (out.empty()) {
        std::cout << stream;
    } else {
        std::ofstream f(out);
        if (!f) throw malformed_input_error("cannot write " + out);
        f << stream;
    }
    return 0;
}

int cmd_count(const std::string& algo, std::uint32_t l, std::uint32_t l1_raw, std::uint32_t j,
              const std::string& input, const Budgets& budgets, unsigned threads) {
    if (l < 3) throw contract_error("count requires --l >= 3");
    std::optional<std::uint32_t> l1;
    if (l1_raw != 0) l1 = l1_raw;
    Graph g = load_edge_list(input);
    CountReport rep;
    rep.algo = algo;
    rep.l = l;
    auto t0 = std::chrono::steady_clock::now();  // parse excluded; matrix setup excluded below

    if (algo == "hybrid" || algo == "matrix") {
        if (l != 3) throw contract_error("--algo " + algo + " requires --l 3");
        if (g.vertex_count() > budgets.matrix_max_n)
            throw capacity_error("n=" + std::to_string(g.vertex_count()) +
                                 " exceeds matrix-max-n=" + std::to_string(budgets.matrix_max_n));
        AdjMatrix m = build_adj_matrix(g);
        t0 = std::chrono::steady_clock::now();
        if (algo == "hybrid") {
            std::uint64_t c = 0;
            WorkCounter w = list_hybrid(g, m, [&](const Triangle&) { ++c; });
            rep.count.value = c;
            rep.inner_iterations = w.inner_iterations;
            rep.edge_probes = w.edge_probes;
        } else {
            rep.count.value = count_matrix_trace(g, m, budgets.matrix_max_n);
        }
    } else if (algo == "cn" || algo == "ir" || algo == "edge-hash") {
        if (l != 3) throw contract_error("--algo " + algo + " requires --l 3");
        std::uint64_t c = 0;
        auto count = [&](const Triangle&) { ++c; };
        WorkCounter w = algo == "cn"   ? list_chiba_nishizeki(g, count)
                        : algo == "ir" ? list_itai_rodeh(g, count)
                                       : list_edge_iterator_hashed(g, count);
        rep.count.value = c;
        rep.inner_iterations = w.inner_iterations;
        rep.edge_probes = w.edge_probes;
    } else if (algo == "kclique") {
        CliqueCount c = count_k_cliques(g, l, threads);
        rep.count.value = c.count;
        rep.inner_iterations = c.work.inner_iterations;
    } else if (algo == "extension") {
        MethodResult r = extension_count(g, l, l1, budgets, threads);
        rep.count = r.count;
        rep.inner_iterations = r.work.inner_iterations;
        rep.edge_probes = r.work.edge_probes;
        rep.method = "extension";
        rep.split = r.plan.split;
        rep.multiplicity = r.plan.multiplicity;
        rep.pre_division_total = r.pre_division_total;
    } else if (algo == "triangle-method") {
        MethodResult r = triangle_method_count(g, l, budgets);
        rep.count = r.count;
        rep.inner_iterations = r.work.inner_iterations;
        rep.edge_probes = r.work.edge_probes;
        rep.method = "triangle-method";
        rep.split = r.plan.split;
        rep.multiplicity = r.plan.multiplicity;
        rep.pre_division_total = r.pre_division_total;
    } else if (algo == "edge-count") {
        auto witness = edge_count_detect(g, j, budgets);
        rep.l = 4 * j;
        rep.count.value = witness ? 1 : 0;  // detection: 1 iff a witness exists
        rep.method = "edge-count";
        rep.split = {j, 0};
        if (witness) rep.witness = *witness;
    } else {
        throw contract_error("unknown count algo: " + algo);
    }
    rep.millis = elapsed_ms(t0);
    std::cout << rep.to_json().dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& input, std::uint32_t l_max, const Budgets& budgets) {
    Graph g = load_edge_list(input);

    // pick up a generator certificate sitting next to the input, if any
    std::optional<GeneratorCertificate> cert;
    std::string cert_path = input;
    if (cert_path.size() > 3 && cert_path.substr(cert_path.size() - 3) == ".el")
        cert_path = cert_path.substr(0, cert_path.size() - 3);
    cert_path += ".cert.json";
    if (std::filesystem::exists(cert_path)) {
        std::ifstream f(cert_path);
        nlohmann::json j;
        f >> j;
        cert = GeneratorCertificate::from_json(j);
        std::cerr << "using certificate " << cert_path << "\n";
    }

    VerifyReport rep = verify_graph(g, l_max, budgets, cert ? &*cert : nullptr);
    for (const auto& c : rep.checks) {
        if (c.skipped)
            std::cout << "SKIP " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        else if (c.pass)
            std::cout << "PASS " << c.name << "\n";
        else
            std::cout << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

struct BenchArgs {
    std::string models;
    std::string sizes;
    std::string bs = "8";
    std::uint32_t k = 2;
    double p = 0.1;
    double avg_deg = 0.0;
    std::string algos;
    std::uint32_t l = 3;
    std::uint64_t seed = 1;
    std::string csv;
};

int cmd_bench(const BenchArgs& a, const Budgets& budgets, unsigned threads) {
    std::vector<BenchGraphSpec> graphs;
    for (const std::string& model : split_csv(a.models)) {
        if (model == "lemma3") {
            for (const std::string& bs : split_csv(a.bs)) {
                BenchGraphSpec spec;
                spec.model = model;
                spec.k = a.k;
                spec.b = static_cast<std::uint32_t>(std::stoul(bs));
                graphs.push_back(spec);
            }
        } else {
            for (const std::string& ns : split_csv(a.sizes)) {
                BenchGraphSpec spec;
                spec.model = model;
                spec.n = static_cast<VertexId>(std::stoul(ns));
                spec.seed = a.seed;
                spec.p = a.avg_deg > 0.0 ? std::min(1.0, a.avg_deg / spec.n) : a.p;
                graphs.push_back(spec);
            }
        }
    }

    auto rows = run_bench(graphs, split_csv(a.algos), a.l, budgets, threads);
    if (a.csv.empty()) {
        write_bench_csv(std::cout, rows);
    } else {
        std::ofstream f(a.csv);
        if (!f) throw malformed_input_error("cannot write " + a.csv);
        write_bench_csv(f, rows);
        std::cerr << rows.size() << " rows -> " << a.csv << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle and k-clique listing/counting for sparse graphs"};
    app.require_subcommand(1);

    Budgets budgets;
    unsigned threads = 1;
    app.add_option("--matrix-max-n", budgets.matrix_max_n,
                   "refuse adjacency-matrix algorithms above this vertex count");
    app.add_option("--oracle-budget", budgets.oracle_tuple_budget,
                   "max C(n,l) tuples for brute-force oracles");
    app.add_option("--h-max", budgets.h_vertex_budget, "max auxiliary-graph vertices");
    app.add_option("--threads", threads, "worker threads for parallel paths");

    GenerateArgs gen;
    auto* sc_gen = app.add_subcommand("generate", "write an edge list plus certificate JSON");
    sc_gen->add_option("--model", gen.model,
                       "lemma2|lemma3|complete|complete-bipartite|cycle|path|gnp")
        ->required();
    sc_gen->add_option("--n", gen.n, "vertex count");
    sc_gen->add_option("--m", gen.m, "edge count (lemma2)");
    sc_gen->add_option("--k", gen.k, "block count (lemma3)");
    sc_gen->add_option("--b", gen.b, "block size, even (lemma3)");
    sc_gen->add_option("--n-pad", gen.n_pad, "isolated padding vertices (lemma3)");
    sc_gen->add_option("--n1", gen.n1, "first side (complete-bipartite)");
    sc_gen->add_option("--n2", gen.n2, "second side (complete-bipartite)");
    sc_gen->add_option("--p", gen.p, "edge probability (gnp)");
    sc_gen->add_option("--seed", gen.seed, "rng seed (gnp)");
    sc_gen->add_option("--out", gen.out, "output path prefix")->required();

    std::string list_algo = "edge-hash", list_out;
    std::uint32_t list_l = 3;
    std::string list_input;
    auto* sc_list = app.add_subcommand("list", "stream triangles or k-cliques");
    sc_list->add_option("--algo", list_algo, "hybrid|cn|ir|edge-hash|kclique");
    sc_list->add_option("--l", list_l, "clique size (kclique)");
    sc_list->add_option("--out", list_out, "output file (default stdout)");
    sc_list->add_option("input", list_input, "edge-list file")->required();

    std::string count_algo = "hybrid", count_input;
    std::uint32_t count_l = 3;
    std::uint32_t count_l1 = 0;  // 0: use the default split
    std::uint32_t count_j = 1;
    auto* sc_count = app.add_subcommand("count", "count subgraphs, JSON report on stdout");
    sc_count->add_option("--algo", count_algo,
                         "hybrid|cn|ir|edge-hash|matrix|kclique|extension|triangle-method|edge-count");
    sc_count->add_option("--l", count_l, "clique size");
    sc_count->add_option("--l1", count_l1, "extension split (default l-3 for l > 5, else 2)");
    sc_count->add_option("--j", count_j, "clique size per H-vertex (edge-count)");
    sc_count->add_option("input", count_input, "edge-list file")->required();

    std::string verify_input;
    std::uint32_t verify_l_max = 5;
    auto* sc_verify = app.add_subcommand("verify", "cross-check all algorithms on one graph");
    sc_verify->add_option("--l-max", verify_l_max, "largest clique size to cross-check");
    sc_verify->add_option("input", verify_input, "edge-list file")->required();

    BenchArgs bench;
    auto* sc_bench = app.add_subcommand("bench", "run a grid and emit CSV");
    sc_bench->add_option("--models", bench.models, "comma list: complete,gnp,lemma3,cycle,path")
        ->required();
    sc_bench->add_option("--sizes", bench.sizes, "comma list of n values");
    sc_bench->add_option("--b", bench.bs, "comma list of lemma3 block sizes");
    sc_bench->add_option("--k", bench.k, "lemma3 block count");
    sc_bench->add_option("--p", bench.p, "gnp edge probability");
    sc_bench->add_option("--avg-deg", bench.avg_deg, "gnp expected degree (overrides --p)");
    sc_bench->add_option("--algos", bench.algos, "comma list of algorithms")->required();
    sc_bench->add_option("--l", bench.l, "clique size for clique algorithms");
    sc_bench->add_option("--seed", bench.seed, "gnp seed");
    sc_bench->add_option("--csv", bench.csv, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_gen->parsed()) return cmd_generate(gen);
        if (sc_list->parsed())
            return cmd_list(list_algo, list_l, list_input, list_out, budgets, threads);
        if (sc_count->parsed())
            return cmd_count(count_algo, count_l, count_l1, count_j, count_input, budgets, threads);
        if (sc_verify->parsed()) return cmd_verify(verify_input, verify_l_max, budgets);
        if (sc_bench->parsed()) return cmd_bench(bench, budgets, threads);
    } catch (const capacity_error& e) {
        std::cout << tricl::error_json("capacity", e.what()).dump() << "\n";
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const malformed_input_error& e) {
        std::cout << tricl::error_json("parse", e.what()).dump() << "\n";
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const contract_error& e) {
        std::cout << tricl::error_json("contract", e.what()).dump() << "\n";
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << tricl::error_json("internal", e.what()).dump() << "\n";
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
