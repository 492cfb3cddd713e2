#include "tricl/report.hpp"

namespace tricl {

nlohmann::json big_count_json(const BigCount& c) {
    if (c.fits_u64() && c.value <= 0x7fffffffffffffffULL)
        return static_cast<std::int64_t>(c.as_u64());
    return u128_to_string(c.value);
}

nlohmann::json CountReport::to_json() const {
    nlohmann::json j;
    j["algo"] = algo;
    j["l"] = l;
    j["count"] = big_count_json(count);
    if (count.saturated) j["saturated"] = true;
    j["inner_iterations"] = inner_iterations;
    j["edge_probes"] = edge_probes;
    j["millis"] = millis;
    if (method) j["method"] = *method;
    if (split) j["split"] = {split->first, split->second};
    if (multiplicity) j["multiplicity"] = big_count_json(*multiplicity);
    if (pre_division_total) j["pre_division_total"] = big_count_json(*pre_division_total);
    if (witness) j["witness"] = *witness;
    return j;
}

nlohmann::json error_json(const std::string& kind, const std::string& message) {
    return nlohmann::json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace tricl
