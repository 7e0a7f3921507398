#pragma once

#include <string>

#include "json.hpp"
#include "toricdist/classify.hpp"
#include "toricdist/counting.hpp"
#include "toricdist/forms.hpp"

namespace toricdist {

using Json = nlohmann::ordered_json;

// Integers beyond 2^53 are written as decimal strings.
Json integer_json(std::int64_t x);
Json integer_json(const Integer& x);
std::int64_t int64_from_json(const Json& j);

// {"name", "n", "r", "degrees", "orbifold", "chow"} in that order.
Json to_json(const VarietySpec& v);
VarietySpec variety_from_json(const Json& j);

// "(2,2)", "[2,2]", "2" or "2,2"
std::vector<std::int64_t> parse_degree(const std::string& text);

// Degrees are written in the family's tuple convention.
Json to_json(const CountReport& report, const VarietySpec& v);
Json to_json(const ClassificationResult& result, const VarietySpec& v);
Json to_json(const ValidationReport& report, const VarietySpec& v);

Json to_json(const OneForm& w, const VariableNames& names);
OneForm one_form_from_json(const Json& j, const VariableNames& names);

// {"components": [{"coefficient": "3", "exponents": [2, 0]}, ...], "group_order": 3}
MonomialChartForm chart_form_from_json(const Json& j);

}  // namespace toricdist
