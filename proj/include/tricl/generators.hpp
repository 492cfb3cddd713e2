#pragma once

#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace tricl {

// What a generator promises about its output: exact K_l counts where a closed
// form exists, and an arboricity upper bound when the construction certifies one.
struct GeneratorCertificate {
    std::string model;
    std::map<std::string, std::string> params;
    VertexId n = 0;
    std::uint64_t m = 0;
    std::map<std::uint32_t, BigCount> expected_counts;
    std::optional<std::uint32_t> alpha_claim;
    std::optional<std::uint64_t> seed;

    nlohmann::json to_json() const;
    static GeneratorCertificate from_json(const nlohmann::json& j);
};

struct Generated {
    Graph graph;
    GeneratorCertificate cert;
};

// Clique K_x on the first x vertices, where C(x,2) <= m < C(x+1,2); the remaining
// m - C(x,2) edges go from the clique to the independent tail, round-robin over
// the tail so the triangle count has a closed form.
Generated gen_lemma2(VertexId n, std::uint64_t m);

// k disjoint K_b blocks fully joined to an independent set of b/2 vertices, plus
// n_pad isolated vertices. K_l count is k*C(b,l) + k*C(b,l-1)*(b/2); arboricity
// is at most b.
Generated gen_lemma3(std::uint32_t k, std::uint32_t b, VertexId n_pad = 0);

Generated gen_complete(VertexId n);
Generated gen_complete_bipartite(VertexId a, VertexId b);
Generated gen_cycle(VertexId n);
Generated gen_path(VertexId n);

// G(n,p) from a splitmix64 stream: pairs visited in lexicographic u < v order,
// edge kept iff the next uniform draw is < p. Identical across platforms.
Generated gen_gnp(VertexId n, double p, std::uint64_t seed);

// splitmix64, exposed for anything else that needs a tiny seeded stream.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double next_uniform() {  // [0, 1) with 53 random bits
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

}  // namespace tricl
