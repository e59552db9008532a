#pragma once

#include "gspec/graph.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gspec {

struct Violation {
  std::string first;   // graph6
  std::string second;  // graph6, empty for single-graph checks
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct SuiteResult {
  std::string suite;
  std::string corpus;
  std::size_t examined = 0;
  std::vector<Violation> violations;  // sorted
  nlohmann::json details = nlohmann::json::object();
  bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
  std::optional<int> max_n;         // suite default when empty
  std::optional<std::string> file;  // graph6 records, one per line
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  /// Node budget for the closed-walk sentences of the logic suite.
  std::size_t formula_budget = 50'000'000;
};

struct CorpusGraph {
  Graph graph;
  std::string graph6;
};

/// Streams the corpus: every enumerated graph with min_n <= n <= max_n, or
/// every record of `file` in that order range. File parse errors are
/// rethrown as ParseError-derived messages naming the file and line.
void for_each_corpus_graph(const SuiteOptions& options, int default_max_n, int min_n,
                           const std::function<void(CorpusGraph&&)>& visit);

/// Runs f(i) for i in [0, count) on `jobs` threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& f);

const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace gspec
