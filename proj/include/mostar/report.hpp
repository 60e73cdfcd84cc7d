#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mostar/verify.hpp"

namespace mostar {

inline nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : r.params)
        params[key] = value;
    nlohmann::json j{
        {"n", r.n},
        {"params", std::move(params)},
        {"direction", std::string(to_string(r.direction))},
        {"constraint", r.constraint},
        {"claimed", r.claimed_family},
        {"valid", r.valid_instance},
        {"class_size", r.class_size},
        {"brute_value", r.brute_value ? nlohmann::json(*r.brute_value) : nlohmann::json(nullptr)},
        {"claimed_value", r.claimed_value ? nlohmann::json(*r.claimed_value) : nlohmann::json(nullptr)},
        {"value_match", r.value_match},
        {"claimed_is_argopt", r.claimed_is_argopt},
        {"argopt_unique", r.argopt_unique},
        {"argopt_count", r.argopt_count},
        {"millis", r.millis},
    };
    if (!r.valid_instance)
        j["reason"] = r.invalid_reason;
    return j;
}

/// {claim, instances: [...]} for one claim's reports.
inline nlohmann::json reports_to_json(const std::string& claim, const std::vector<VerificationReport>& reports) {
    nlohmann::json instances = nlohmann::json::array();
    for (const auto& r : reports)
        instances.push_back(to_json(r));
    return {{"claim", claim}, {"instances", std::move(instances)}};
}

inline std::string csv_header() {
    return "claim,n,params,direction,constraint,claimed,valid,class_size,brute_value,claimed_value,"
           "value_match,claimed_is_argopt,argopt_unique,argopt_count,millis\n";
}

inline std::string to_csv_row(const VerificationReport& r) {
    std::ostringstream out;
    std::string params;
    for (const auto& [key, value] : r.params)
        params += (params.empty() ? "" : ";") + key + "=" + std::to_string(value);
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string{}; };
    auto quote = [](const std::string& s) {
        return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
    };
    out << r.claim << ',' << r.n << ',' << params << ',' << to_string(r.direction) << ','
        << quote(r.constraint) << ',' << quote(r.claimed_family) << ',' << (r.valid_instance ? 1 : 0) << ','
        << r.class_size << ',' << opt(r.brute_value) << ',' << opt(r.claimed_value) << ','
        << (r.value_match ? 1 : 0) << ',' << (r.claimed_is_argopt ? 1 : 0) << ',' << (r.argopt_unique ? 1 : 0)
        << ',' << r.argopt_count << ',' << r.millis << '\n';
    return out.str();
}

} // namespace mostar
