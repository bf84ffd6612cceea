#pragma once

// Deterministic text and JSON reports shared by the CLI and the Python module.
// The JSON layout is documented in docs/report-schema.md.

#include <json.hpp>
#include <string>

#include "mhproj/projmodel.hpp"
#include "mhproj/sections.hpp"

namespace mhproj::report {

using json = nlohmann::json;

inline constexpr const char* kSchema = "mhproj.report/1";

json cone_to_json(const Cone& c);
/// Rebuilds a cone from the "rays" and "lineality" fields of cone_to_json.
Cone cone_from_json(const json& j);

json ring_to_json(const RingSpec& spec);
json support_to_json(const RingSpec& spec, const Support& J);
json chart_to_json(const RingSpec& spec, const Chart& chart);
json separation_to_json(const ProjModel& model, const SeparationReport& sep);

json analyze(const ProjModel& model);
json charts(const RingSpec& spec, const Chart& chart);
json zero_subring(const RingSpec& spec, const HilbertBasis& basis, const std::vector<IntVector>& relations,
                  std::size_t relation_bound);
json veronese(const RingSpec& spec, const std::vector<IntVector>& forms, const HilbertBasis& basis);
json separation(const ProjModel& model);

/// Human-readable rendering of any report produced above.
std::string to_text(const json& report);

/// "1" -> {(1)}; "1,0;0,1" -> {(1,0),(0,1)}. Forms are separated by ';',
/// coefficients by ','. Throws DomainError on malformed input.
std::vector<IntVector> parse_forms(const std::string& text);

}  // namespace mhproj::report
