#include "tricl/generators.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace tricl {

namespace {

nlohmann::json big_to_json(const BigCount& c) {
    if (c.fits_u64()) return c.as_u64();
    return u128_to_string(c.value);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

nlohmann::json GeneratorCertificate::to_json() const {
    nlohmann::json j;
    j["model"] = model;
    j["params"] = params;
    j["n"] = n;
    j["m"] = m;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [l, c] : expected_counts) counts[std::to_string(l)] = big_to_json(c);
    j["expected_counts"] = counts;
    if (alpha_claim) j["alpha_claim"] = *alpha_claim;
    if (seed) j["seed"] = *seed;
    return j;
}

GeneratorCertificate GeneratorCertificate::from_json(const nlohmann::json& j) {
    GeneratorCertificate c;
    c.model = j.at("model").get<std::string>();
    if (j.contains("params"))
        c.params = j.at("params").get<std::map<std::string, std::string>>();
    c.n = j.at("n").get<VertexId>();
    c.m = j.at("m").get<std::uint64_t>();
    for (const auto& [key, val] : j.at("expected_counts").items()) {
        BigCount b;
        if (val.is_number_unsigned()) {
            b.value = val.get<std::uint64_t>();
        } else {
            for (char ch : val.get<std::string>()) {
                b.mul(10);
                b.add(static_cast<u128>(ch - '0'));
            }
        }
        c.expected_counts[static_cast<std::uint32_t>(std::stoul(key))] = b;
    }
    if (j.contains("alpha_claim")) c.alpha_claim = j.at("alpha_claim").get<std::uint32_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

Generated gen_lemma2(VertexId n, std::uint64_t m) {
    if (n < 3 || m < 3 || m > binomial(n, 2).value)
        throw contract_error("lemma2 needs n >= 3 and 3 <= m <= C(n,2)");
    // unique x with C(x,2) <= m < C(x+1,2)
    VertexId x = 3;
    while (binomial_u64(x + 1, 2) <= m) ++x;

    std::vector<Edge> edges;
    edges.reserve(m);
    for (VertexId u = 0; u < x; ++u)
        for (VertexId v = u + 1; v < x; ++v) edges.push_back({u, v});
    const std::uint64_t extra = m - binomial_u64(x, 2);
    const VertexId tail = n - x;
    std::vector<std::uint32_t> tail_deg(tail, 0);
    for (std::uint64_t t = 0; t < extra; ++t) {
        VertexId u = static_cast<VertexId>(t / tail);
        VertexId v = x + static_cast<VertexId>(t % tail);
        edges.push_back({u, v});
        ++tail_deg[t % tail];
    }

    Generated out;
    out.graph = Graph::from_edges(n, edges);
    out.cert.model = "lemma2";
    out.cert.params = {{"n", std::to_string(n)}, {"m", std::to_string(m)}};
    out.cert.n = n;
    out.cert.m = out.graph.edge_count();
    BigCount tri = binomial(x, 3);
    for (std::uint32_t d : tail_deg) tri.add(binomial(d, 2));
    out.cert.expected_counts[3] = tri;
    return out;
}

Generated gen_lemma3(std::uint32_t k, std::uint32_t b, VertexId n_pad) {
    if (b < 2 || b % 2 != 0) throw contract_error("lemma3 needs even b >= 2");
    if (k < 1) throw contract_error("lemma3 needs k >= 1");
    const VertexId half = b / 2;
    const VertexId n = k * b + half + n_pad;

    std::vector<Edge> edges;
    for (std::uint32_t c = 0; c < k; ++c) {
        const VertexId base = c * b;
        for (VertexId u = 0; u < b; ++u)
            for (VertexId v = u + 1; v < b; ++v) edges.push_back({base + u, base + v});
    }
    for (VertexId u = 0; u < k * b; ++u)
        for (VertexId v = 0; v < half; ++v) edges.push_back({u, k * b + v});

    Generated out;
    out.graph = Graph::from_edges(n, edges);
    out.cert.model = "lemma3";
    out.cert.params = {{"k", std::to_string(k)},
                       {"b", std::to_string(b)},
                       {"n_pad", std::to_string(n_pad)}};
    out.cert.n = n;
    out.cert.m = out.graph.edge_count();
    out.cert.alpha_claim = b;
    for (std::uint32_t l = 3; l <= b + 1; ++l) {
        BigCount c = binomial(b, l);
        c.mul(k);
        BigCount joined = binomial(b, l - 1);
        joined.mul(k);
        joined.mul(half);
        c.add(joined);
        out.cert.expected_counts[l] = c;
    }
    return out;
}

Generated gen_complete(VertexId n) {
    if (n < 1) throw contract_error("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    Generated out;
    out.graph = Graph::from_edges(n, edges);
    out.cert.model = "complete";
    out.cert.params = {{"n", std::to_string(n)}};
    out.cert.n = n;
    out.cert.m = out.graph.edge_count();
    out.cert.alpha_claim = (n + 1) / 2;
    for (std::uint32_t l = 3; l <= std::min<VertexId>(n, 16); ++l)
        out.cert.expected_counts[l] = binomial(n, l);
    return out;
}

Generated gen_complete_bipartite(VertexId a, VertexId b) {
    if (a < 1 || b < 1) throw contract_error("bipartite sides must be >= 1");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v) edges.push_back({u, a + v});
    Generated out;
    out.graph = Graph::from_edges(a + b, edges);
    out.cert.model = "complete_bipartite";
    out.cert.params = {{"a", std::to_string(a)}, {"b", std::to_string(b)}};
    out.cert.n = a + b;
    out.cert.m = out.graph.edge_count();
    out.cert.expected_counts[3] = BigCount{};  // bipartite: triangle-free
    out.cert.expected_counts[4] = BigCount{};
    return out;
}

Generated gen_cycle(VertexId n) {
    if (n < 3) throw contract_error("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
    Generated out;
    out.graph = Graph::from_edges(n, edges);
    out.cert.model = "cycle";
    out.cert.params = {{"n", std::to_string(n)}};
    out.cert.n = n;
    out.cert.m = out.graph.edge_count();
    out.cert.alpha_claim = 2;
    BigCount tri;
    tri.value = n == 3 ? 1 : 0;
    out.cert.expected_counts[3] = tri;
    return out;
}

Generated gen_path(VertexId n) {
    if (n < 1) throw contract_error("path needs n >= 1");
    std::vector<Edge> edges;
    for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    Generated out;
    out.graph = Graph::from_edges(n, edges);
    out.cert.model = "path";
    out.cert.params = {{"n", std::to_string(n)}};
    out.cert.n = n;
    out.cert.m = out.graph.edge_count();
    out.cert.alpha_claim = 1;
    out.cert.expected_counts[3] = BigCount{};
    return out;
}

Generated gen_gnp(VertexId n, double p, std::uint64_t seed) {
    if (n < 1 || p < 0.0 || p > 1.0) throw contract_error("gnp needs n >= 1 and p in [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.next_uniform() < p) edges.push_back({u, v});
    Generated out;
    out.graph = Graph::from_edges(n, edges);
    out.cert.model = "gnp";
    out.cert.params = {{"n", std::to_string(n)}, {"p", format_double(p)},
                       {"seed", std::to_string(seed)}};
    out.cert.n = n;
    out.cert.m = out.graph.edge_count();
    out.cert.seed = seed;
    return out;
}

}  // namespace tricl
