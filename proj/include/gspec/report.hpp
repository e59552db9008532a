#pragma once

#include "gspec/graph.hpp"
#include "gspec/harness.hpp"
#include "gspec/pebble.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace gspec {

inline constexpr const char* kSchemaVersion = "v1";

/// Verdict bodies. They depend only on the inputs, so equal inputs give
/// byte-identical serializations.
nlohmann::json analyze_report(const Graph& g);
nlohmann::json compare_report(const Graph& g, const Graph& h);
nlohmann::json structure_report(const Graph& g);
nlohmann::json closure_report(const Graph& g, bool with_matrices);
nlohmann::json equivalence_report(const Graph& g, const Graph& h, int logic_k);
nlohmann::json pebble_report(const Graph& g, const Graph& h, const PebbleResult& result);

/// One line per violation followed by a summary line.
std::vector<nlohmann::json> suite_report_lines(const SuiteResult& result);

/// Indented "key: value" rendering for --pretty.
std::string pretty_text(const nlohmann::json& j);

}  // namespace gspec
