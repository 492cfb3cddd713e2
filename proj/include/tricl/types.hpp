#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tricl {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;
};

// Input data (file or edge list) violates the documented format.
struct malformed_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A run would exceed a configured budget (matrix size, H vertices, oracle tuples).
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside an operation's documented domain.
struct contract_error : std::logic_error {
    using std::logic_error::logic_error;
};

// An internal cross-check failed; always indicates a bug, never bad input.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Work accounting for the listing algorithms. Only ever incremented during a run.
struct WorkCounter {
    std::uint64_t inner_iterations = 0;  // innermost-loop executions
    std::uint64_t edge_probes = 0;       // matrix / membership tests

    WorkCounter& operator+=(const WorkCounter& o) {
        inner_iterations += o.inner_iterations;
        edge_probes += o.edge_probes;
        return *this;
    }
};

// Resource limits for the quadratic/exponential code paths.
struct Budgets {
    std::uint32_t matrix_max_n = 65536;           // adjacency bit-matrix refuses above this n
    std::uint64_t h_vertex_budget = 10'000'000;   // max vertices of an auxiliary graph
    std::uint64_t oracle_tuple_budget = 100'000'000;  // max C(n,l) for brute-force scans
    std::uint32_t brute_triangle_max_n = 2000;    // triple-scan oracle guard
};

using u128 = unsigned __int128;

inline constexpr u128 u128_max() { return ~static_cast<u128>(0); }

// Saturating 128-bit counter. Saturation is sticky and reported, never silent wraparound.
struct BigCount {
    u128 value = 0;
    bool saturated = false;

    void add(u128 x) {
        if (saturated) return;
        if (value > u128_max() - x) {
            value = u128_max();
            saturated = true;
        } else {
            value += x;
        }
    }

    void add(const BigCount& o) {
        if (o.saturated) {
            value = u128_max();
            saturated = true;
        } else {
            add(o.value);
        }
    }

    void mul(u128 x) {
        if (saturated) return;
        if (x != 0 && value > u128_max() / x) {
            value = u128_max();
            saturated = true;
        } else {
            value *= x;
        }
    }

    bool fits_u64() const { return !saturated && value <= std::numeric_limits<std::uint64_t>::max(); }
    std::uint64_t as_u64() const { return static_cast<std::uint64_t>(value); }

    friend bool operator==(const BigCount& a, const BigCount& b) {
        return a.saturated == b.saturated && a.value == b.value;
    }
};

std::string u128_to_string(u128 x);

// C(n, k) with saturation on overflow.
BigCount binomial(std::uint64_t n, std::uint64_t k);

// Exact u64 binomial; throws capacity_error if the value does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

}  // namespace tricl
