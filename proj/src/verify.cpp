#include "tricl/verify.hpp"

#include "tricl/bit_matrix.hpp"
#include "tricl/cliques.hpp"
#include "tricl/counting.hpp"
#include "tricl/degeneracy.hpp"
#include "tricl/triangles.hpp"

#include <algorithm>
#include <sstream>

namespace tricl {

namespace {

std::string triple_str(const Triangle& t) {
    std::ostringstream ss;
    ss << "(" << t.i << " " << t.j << " " << t.k << ")";
    return ss.str();
}

// First triple present in exactly one of the two sorted streams.
std::string first_diff(const std::vector<Triangle>& a, const std::vector<Triangle>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            return "only in first: " + triple_str(a[i]);
        } else {
            return "only in second: " + triple_str(b[j]);
        }
    }
    if (i < a.size()) return "only in first: " + triple_str(a[i]);
    if (j < b.size()) return "only in second: " + triple_str(b[j]);
    return "streams identical";
}

}  // namespace

VerifyReport verify_graph(const Graph& g, std::uint32_t l_max, const Budgets& budgets,
                          const GeneratorCertificate* cert) {
    VerifyReport rep;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(name), pass, false, std::move(detail)});
    };
    auto skip = [&](std::string name, std::string why) {
        rep.checks.push_back({std::move(name), false, true, std::move(why)});
    };

    const DegeneracyInfo deg = degeneracy(g);
    const EdgeWork fw = edge_work_functional(g);
    const std::uint64_t m = g.edge_count();

    // work-bound invariants
    const u128 f2 = static_cast<u128>(fw.total) * fw.total;
    const u128 m3 = static_cast<u128>(m) * m * m;
    add("F <= 4 m^(3/2)", f2 <= 16 * m3,
        "F=" + std::to_string(fw.total) + " m=" + std::to_string(m));
    add("F <= 2 m min(alpha_ub_cn, d)",
        fw.total <= 2 * m * static_cast<std::uint64_t>(deg.alpha_ub()),
        "alpha_ub=" + std::to_string(deg.alpha_ub()));

    // five-way triangle agreement against the oracle
    std::vector<Triangle> oracle;
    bool have_oracle = false;
    if (g.vertex_count() <= budgets.brute_triangle_max_n) {
        oracle = brute_force_triangles(g, budgets.brute_triangle_max_n);
        have_oracle = true;
    } else {
        skip("triangles vs oracle", "n exceeds brute-force guard");
    }

    WorkCounter cn_work, ir_work, eh_work;
    auto cn = collect_triangles([&](const Graph& gg, const TriangleSink& s) {
        cn_work = list_chiba_nishizeki(gg, s);
    }, g);
    auto ir = collect_triangles([&](const Graph& gg, const TriangleSink& s) {
        ir_work = list_itai_rodeh(gg, s);
    }, g);
    auto eh = collect_triangles([&](const Graph& gg, const TriangleSink& s) {
        eh_work = list_edge_iterator_hashed(gg, s);
    }, g);
    std::sort(cn.begin(), cn.end());
    std::sort(ir.begin(), ir.end());
    std::sort(eh.begin(), eh.end());

    add("edge-hash inner_iterations <= F", eh_work.inner_iterations <= fw.total,
        std::to_string(eh_work.inner_iterations) + " vs F=" + std::to_string(fw.total));

    if (have_oracle) {
        std::sort(oracle.begin(), oracle.end());
        add("cn vs oracle", cn == oracle, cn == oracle ? "" : first_diff(cn, oracle));
        add("ir vs oracle", ir == oracle, ir == oracle ? "" : first_diff(ir, oracle));
        add("edge-hash vs oracle", eh == oracle, eh == oracle ? "" : first_diff(eh, oracle));
    } else {
        add("cn vs edge-hash", cn == eh, cn == eh ? "" : first_diff(cn, eh));
        add("ir vs edge-hash", ir == eh, ir == eh ? "" : first_diff(ir, eh));
    }

    if (g.vertex_count() <= budgets.matrix_max_n) {
        AdjMatrix mat = build_adj_matrix(g);
        WorkCounter hy_work;
        auto hy = collect_triangles([&](const Graph& gg, const TriangleSink& s) {
            hy_work = list_hybrid(gg, mat, s);
        }, g);
        std::sort(hy.begin(), hy.end());
        add("hybrid vs edge-hash", hy == eh, hy == eh ? "" : first_diff(hy, eh));
        add("hybrid inner_iterations <= F", hy_work.inner_iterations <= fw.total,
            std::to_string(hy_work.inner_iterations) + " vs F=" + std::to_string(fw.total));
        std::uint64_t mt = count_matrix_trace(g, mat, budgets.matrix_max_n);
        add("matrix trace count", mt == eh.size(),
            std::to_string(mt) + " vs " + std::to_string(eh.size()));
    } else {
        skip("hybrid + matrix trace", "n exceeds matrix-max-n");
    }

    // k-clique agreement across methods
    for (std::uint32_t l = 4; l <= l_max; ++l) {
        std::string tag = "l=" + std::to_string(l) + " ";
        CliqueCount listed = count_k_cliques(g, l);

        bool brute_ok = true;
        std::uint64_t brute = 0;
        try {
            brute = brute_force_k_cliques(g, l, budgets);
        } catch (const capacity_error&) {
            brute_ok = false;
        }
        if (brute_ok)
            add(tag + "kclique vs brute", listed.count == brute,
                std::to_string(listed.count) + " vs " + std::to_string(brute));
        else
            skip(tag + "kclique vs brute", "oracle budget exceeded");

        MethodResult ext = extension_count(g, l, std::nullopt, budgets);
        add(tag + "extension vs kclique", !ext.count.saturated && ext.count.value == listed.count,
            u128_to_string(ext.count.value) + " vs " + std::to_string(listed.count));

        if (l % 3 == 0) {
            MethodResult tm = triangle_method_count(g, l, budgets);
            add(tag + "triangle-method vs kclique",
                !tm.count.saturated && tm.count.value == listed.count,
                u128_to_string(tm.count.value) + " vs " + std::to_string(listed.count));
        }
    }

    if (cert) {
        add("certificate n", cert->n == g.vertex_count(),
            std::to_string(cert->n) + " vs " + std::to_string(g.vertex_count()));
        add("certificate m", cert->m == g.edge_count(),
            std::to_string(cert->m) + " vs " + std::to_string(g.edge_count()));
        for (const auto& [l, expected] : cert->expected_counts) {
            if (l > l_max) continue;
            std::uint64_t got = l == 3 ? eh.size() : count_k_cliques(g, l).count;
            add("certificate count l=" + std::to_string(l),
                !expected.saturated && expected.value == got,
                u128_to_string(expected.value) + " vs " + std::to_string(got));
        }
        if (cert->alpha_claim)
            add("certificate alpha claim: d <= 2 alpha - 1",
                deg.d <= 2 * *cert->alpha_claim - 1,
                "d=" + std::to_string(deg.d) + " alpha_claim=" + std::to_string(*cert->alpha_claim));
    }

    return rep;
}

}  // namespace tricl
