#pragma once

#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace tricl {

// Packed symmetric adjacency bit matrix, row-major. Zero diagonal.
// O(n^2 / 8) bytes; callers gate construction behind Budgets::matrix_max_n.
class AdjMatrix {
public:
    AdjMatrix() = default;

    explicit AdjMatrix(VertexId n)
        : n_(n), words_per_row_((static_cast<std::size_t>(n) + 63) / 64),
          bits_(words_per_row_ * n, 0) {}

    VertexId dimension() const { return n_; }

    bool test(VertexId u, VertexId v) const {
        return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
    }

    void set_edge(VertexId u, VertexId v) {
        bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }

    std::span<const std::uint64_t> row(VertexId u) const {
        return {bits_.data() + row_offset(u), words_per_row_};
    }

    std::size_t words_per_row() const { return words_per_row_; }

private:
    std::size_t row_offset(VertexId u) const { return static_cast<std::size_t>(u) * words_per_row_; }

    VertexId n_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

AdjMatrix build_adj_matrix(const Graph& g);

inline std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

}  // namespace tricl
