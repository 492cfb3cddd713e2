#pragma once

#include "tricl/counting.hpp"
#include "tricl/types.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tricl {

// Result of one counting/listing run, serialized as the JSON the CLI prints.
// Counts above 2^63-1 are emitted as decimal strings so they stay exact.
struct CountReport {
    std::string algo;
    std::uint32_t l = 3;
    BigCount count;
    std::uint64_t inner_iterations = 0;
    std::uint64_t edge_probes = 0;
    double millis = 0.0;

    // composite methods only
    std::optional<std::string> method;  // extension | triangle-method | edge-count
    std::optional<std::pair<std::uint32_t, std::uint32_t>> split;
    std::optional<BigCount> multiplicity;
    std::optional<BigCount> pre_division_total;
    std::optional<std::vector<VertexId>> witness;  // detection runs

    nlohmann::json to_json() const;
};

nlohmann::json big_count_json(const BigCount& c);

nlohmann::json error_json(const std::string& kind, const std::string& message);

}  // namespace tricl
