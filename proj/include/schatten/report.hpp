#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "schatten/opfamily.hpp"
#include "schatten/verify.hpp"

namespace schatten::cli {

using json = nlohmann::json;

// 64-bit FNV-1a, used for instance digests.
uint64_t fnv1a(std::string_view data);
std::string hex64(uint64_t v);

// Matrices serialize as {"rows", "cols", "data": [re, im, re, im, ...]};
// doubles round-trip exactly through nlohmann's shortest representation.
json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const json& j);
json to_json(const WeightedFamily& f);

// Infinite parameter values (the extended exponents) encode as the string
// "inf" since JSON has no infinity literal.
json params_to_json(const std::map<std::string, double>& params);
std::map<std::string, double> params_from_json(const json& j);

// One line-delimited record. `instance` is embedded only when present
// (failure forensics / the sample subcommand).
json record_to_json(const verify::InequalityReport& rep, double wall_ms,
                    uint64_t digest, const json* instance);
verify::InequalityReport report_from_record(const json& record);

}  // namespace schatten::cli
