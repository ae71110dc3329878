#pragma once

#include <string>

#include "json.hpp"

#include "core/analyzers.hpp"
#include "core/harness.hpp"
#include "core/instances.hpp"

namespace incdec {

using Json = nlohmann::json;

// Accepts JSON integers and "p/q" strings; floats are rejected so nothing
// silently loses exactness.
Value value_from_json(const Json& j, const std::string& where);
Json value_to_json(const Value& v);  // canonical string

// Instance files: {"n", "labels"?, "g": spec, "h": spec, "raw"?} or
// {"n", "f": spec}; a top-level {"type": "named", ...} expands through the
// catalog. Specs appearing in a slot are fully expanded on parse.
Instance parse_instance_json(const Json& j);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);
Json instance_to_json(const Instance& instance);

Json structure_json(const GroundSet& ground, const StructureReport& report);
Json property_report_json(const GroundSet& ground, const PropertyReport& report);
Json ratio_report_json(const GroundSet& ground, const RatioReport& report);
std::string ratio_report_csv(const GroundSet& ground, const RatioReport& report);
Json trace_json(const GroundSet& ground, const DoubleGreedyTrace& trace);
Json ordering_json(const GroundSet& ground, const Ordering& ordering);
Ordering ordering_from_json(const GroundSet& ground, const Json& j);

Prec parse_prec(const std::string& text);
// "min-index" | "max-index" | "priority:a,b,c" (labels, best first).
TieBreak parse_tie_spec(const GroundSet& ground, const std::string& text);

// Sorted keys, two-space indent, trailing newline: identical data gives
// byte-identical output.
std::string dump_stable(const Json& j);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace incdec
