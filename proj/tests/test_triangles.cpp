#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"

#include "tricl/degeneracy.hpp"
#include "tricl/generators.hpp"
#include "tricl/triangles.hpp"

using namespace tricl;
using namespace tricl::test;

namespace {

// Every algorithm agrees with the brute-force oracle; counters respect F.
void check_against_oracle(const Graph& g) {
    std::vector<Triangle> oracle = brute_force_triangles(g);
    std::sort(oracle.begin(), oracle.end());
    TriangleRuns r = run_all_triangle_algos(g);
    CHECK(r.hybrid == oracle);
    CHECK(r.cn == oracle);
    CHECK(r.ir == oracle);
    CHECK(r.edge_hash == oracle);
    CHECK(r.matrix_count == oracle.size());

    EdgeWork w = edge_work_functional(g);
    CHECK(r.hybrid_work.inner_iterations <= w.total);
    CHECK(r.edge_hash_work.inner_iterations <= w.total);
    CHECK(r.edge_hash_work.edge_probes <= w.total);
    CHECK(oracle.size() <= w.total);
    u128 c2 = static_cast<u128>(oracle.size()) * oracle.size();
    u128 m3 = static_cast<u128>(g.edge_count()) * g.edge_count() * g.edge_count();
    CHECK(c2 <= 16 * m3);  // count <= 4 m^{3/2}
}

}  // namespace

TEST_CASE("K4 yields its four triangles") {
    TriangleRuns r = run_all_triangle_algos(complete_graph(4));
    std::vector<Triangle> want = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    CHECK(r.hybrid == want);
    CHECK(r.cn == want);
    CHECK(r.ir == want);
    CHECK(r.edge_hash == want);
    CHECK(r.matrix_count == 4);
}

TEST_CASE("C5 is triangle-free") {
    TriangleRuns r = run_all_triangle_algos(cycle_graph(5));
    CHECK(r.hybrid.empty());
    CHECK(r.cn.empty());
    CHECK(r.ir.empty());
    CHECK(r.edge_hash.empty());
    CHECK(r.matrix_count == 0);
}

TEST_CASE("lemma3 fixture has 48 triangles") {
    // closed form at l=3: k C(b,3) + k C(b,2) b/2 = 12 + 36
    Graph g = gen_lemma3(3, 4).graph;
    TriangleRuns r = run_all_triangle_algos(g);
    CHECK(r.hybrid.size() == 48);
    check_against_oracle(g);
}

TEST_CASE("two disjoint K3s") {
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
    Graph g = Graph::from_edges(6, edges);
    auto tris = collect_triangles([&](const Graph& gg, const TriangleSink& s) {
        list_chiba_nishizeki(gg, s);
    }, g);
    std::sort(tris.begin(), tris.end());
    CHECK(tris == std::vector<Triangle>{{0, 1, 2}, {3, 4, 5}});
}

TEST_CASE("K5 has C(5,3) = 10 triangles via edge-hash") {
    std::uint64_t c = 0;
    list_edge_iterator_hashed(complete_graph(5), [&](const Triangle&) { ++c; });
    CHECK(c == 10);
}

TEST_CASE("star has no triangles") {
    std::uint64_t c = 0;
    list_edge_iterator_hashed(star_graph(9), [&](const Triangle&) { ++c; });
    CHECK(c == 0);
}

TEST_CASE("itai-rodeh on small fixtures") {
    auto k3 = collect_triangles([](const Graph& g, const TriangleSink& s) {
        list_itai_rodeh(g, s);
    }, complete_graph(3));
    CHECK(k3 == std::vector<Triangle>{{0, 1, 2}});

    Graph lemma2 = gen_lemma2(50, 300).graph;
    auto got = collect_triangles([](const Graph& g, const TriangleSink& s) {
        list_itai_rodeh(g, s);
    }, lemma2);
    auto oracle = brute_force_triangles(lemma2);
    std::sort(got.begin(), got.end());
    std::sort(oracle.begin(), oracle.end());
    CHECK(got == oracle);
}

TEST_CASE("matrix trace on fixtures") {
    CHECK(count_matrix_trace(cycle_graph(6), build_adj_matrix(cycle_graph(6))) == 0);
    Graph g = gen_lemma3(3, 4).graph;
    CHECK(count_matrix_trace(g, build_adj_matrix(g)) == 48);
}

TEST_CASE("matrix threshold is enforced") {
    Graph g = complete_graph(10);
    AdjMatrix m = build_adj_matrix(g);
    CHECK_THROWS_AS(count_matrix_trace(g, m, 9), capacity_error);
    AdjMatrix wrong(11);
    CHECK_THROWS_AS(list_hybrid(g, wrong, [](const Triangle&) {}), contract_error);
}

TEST_CASE("brute force guard") {
    CHECK_THROWS_AS(brute_force_triangles(Graph::from_edges(2001, {}), 2000), capacity_error);
    CHECK(brute_force_triangles(Graph::from_edges(5, {})).empty());
}

TEST_CASE("complete graphs count C(n,3)") {
    for (VertexId n = 3; n <= 12; ++n) {
        TriangleRuns r = run_all_triangle_algos(complete_graph(n));
        std::uint64_t want = binomial_u64(n, 3);
        CHECK(r.hybrid.size() == want);
        CHECK(r.cn.size() == want);
        CHECK(r.ir.size() == want);
        CHECK(r.edge_hash.size() == want);
        CHECK(r.matrix_count == want);
    }
}

TEST_CASE("random graphs match the oracle") {
    check_against_oracle(gnp_graph(60, 0.3, 17));
    check_against_oracle(gnp_graph(100, 0.1, 23));
    check_against_oracle(gnp_graph(40, 0.5, 7));
    check_against_oracle(gnp_graph(30, 0.05, 99));
    check_against_oracle(gen_lemma2(40, 200).graph);
    check_against_oracle(gen_lemma3(2, 6).graph);
}

TEST_CASE("hybrid work lands exactly on F") {
    // the inner loop scans min(deg) entries per edge, nothing skipped
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = gnp_graph(50, 0.25, seed);
        AdjMatrix m = build_adj_matrix(g);
        WorkCounter w = list_hybrid(g, m, [](const Triangle&) {});
        CHECK(w.inner_iterations == edge_work_functional(g).total);
    }
}

TEST_CASE("streams are unique and deterministic") {
    Graph g = gnp_graph(70, 0.2, 31);
    auto a = collect_triangles([](const Graph& gg, const TriangleSink& s) {
        list_edge_iterator_hashed(gg, s);
    }, g);
    auto b = collect_triangles([](const Graph& gg, const TriangleSink& s) {
        list_edge_iterator_hashed(gg, s);
    }, g);
    CHECK(a == b);  // identical emission order run-to-run
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    auto ir1 = collect_triangles([](const Graph& gg, const TriangleSink& s) {
        list_itai_rodeh(gg, s);
    }, g);
    auto ir2 = collect_triangles([](const Graph& gg, const TriangleSink& s) {
        list_itai_rodeh(gg, s);
    }, g);
    CHECK(ir1 == ir2);
    std::sort(ir1.begin(), ir1.end());
    CHECK(std::adjacent_find(ir1.begin(), ir1.end()) == ir1.end());

    auto cn = collect_triangles([](const Graph& gg, const TriangleSink& s) {
        list_chiba_nishizeki(gg, s);
    }, g);
    std::sort(cn.begin(), cn.end());
    CHECK(std::adjacent_find(cn.begin(), cn.end()) == cn.end());
}

TEST_CASE("hybrid reports each triangle at its smallest edge, in sorted order") {
    for (std::uint64_t seed : {2, 9}) {
        Graph g = gnp_graph(45, 0.3, seed);
        AdjMatrix m = build_adj_matrix(g);
        auto raw = collect_triangles([&](const Graph& gg, const TriangleSink& s) {
            list_hybrid(gg, m, s);
        }, g);
        CHECK(std::is_sorted(raw.begin(), raw.end()));
    }
}

TEST_CASE("tiny graphs") {
    for (VertexId n : {0u, 1u, 2u}) {
        Graph g = Graph::from_edges(n, n == 2 ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{});
        TriangleRuns r = run_all_triangle_algos(g);
        CHECK(r.hybrid.empty());
        CHECK(r.cn.empty());
        CHECK(r.ir.empty());
        CHECK(r.edge_hash.empty());
        CHECK(r.matrix_count == 0);
        CHECK(brute_force_triangles(g).empty());
    }
}

TEST_CASE("triangle stream serialization is sorted") {
    Graph g = complete_graph(4);
    auto tris = collect_triangles([](const Graph& gg, const TriangleSink& s) {
        list_chiba_nishizeki(gg, s);
    }, g);
    CHECK(triangle_stream_string(tris) == "0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
}
