#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "placement/instance.hpp"
#include "placement/solvers.hpp"

namespace placement {

using Json = nlohmann::json;

// Malformed documents raise ParseError; documents that parse but violate a
// model invariant raise ParseError too, carrying the validation message.

Json to_json(const ChoiceModel& model);
ChoiceModel choice_model_from_json(const Json& j, int num_products);

/// Throws UnsupportedOperation for sampler-only distributions.
Json to_json(const Browsing& browsing);
Browsing browsing_from_json(const Json& j, int m);

Json to_json(const Instance& instance);
Instance instance_from_json(const Json& j);

Json to_json(const SolveReport& report);
SolveReport report_from_json(const Json& j);

/// Pretty-printed with round-trip float formatting, so
/// dump(parse(dump(x))) == dump(x).
std::string dump_instance(const Instance& instance);
Instance parse_instance(std::string_view text);

Instance load_instance(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace placement
