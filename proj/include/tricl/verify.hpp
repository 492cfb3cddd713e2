#pragma once

#include "tricl/generators.hpp"
#include "tricl/graph.hpp"
#include "tricl/types.hpp"

#include <string>
#include <vector>

namespace tricl {

struct VerifyCheck {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.skipped && !c.pass) return false;
        return true;
    }
};

// Cross-algorithm equality (five triangle counters vs the oracle), work-bound
// invariants, k-clique/extension/triangle-method agreement up to l_max, and
// certificate expected counts when a certificate is supplied. Checks whose
// oracle or matrix budget is infeasible are reported as skipped, not failed.
VerifyReport verify_graph(const Graph& g, std::uint32_t l_max, const Budgets& budgets = {},
                          const GeneratorCertificate* cert = nullptr);

}  // namespace tricl
