#pragma once

#include "gspec/formula.hpp"
#include "gspec/graph.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gspec {

using Assignment = std::map<std::string, Vertex>;

/// Model checker for one graph against formulas from one store. Results are
/// memoized per node on the values of that node's free variables, so shared
/// subformulas are decided once per relevant assignment. The memo survives
/// across calls, which makes it cheap to test many roots of a family built
/// in a single store against the same graph. Not thread-safe; use one
/// evaluator per thread.
class Evaluator {
 public:
  Evaluator(const Graph& g, std::shared_ptr<const FormulaStore> store);

  /// Throws PreconditionError if f belongs to another store, if a free
  /// variable of f is unbound, or if a bound vertex is out of range.
  bool evaluate(const Formula& f, const Assignment& env = {});

  /// For a root of the form Qv. body: the number of vertices w for which
  /// body holds with v = w. Empty for other roots.
  std::optional<std::size_t> top_level_witnesses(const Formula& f, const Assignment& env = {});

 private:
  void bind(const Formula& f, const Assignment& env);
  bool eval(NodeId id);
  std::size_t count_witnesses(VarId v, NodeId body, std::size_t stop_at);
  std::int8_t* memo_slot(NodeId id, const FormulaNode& node);

  Graph g_;
  std::shared_ptr<const FormulaStore> store_;
  std::vector<Vertex> env_;
  std::vector<std::uint64_t> memo_offset_;
  std::vector<std::int8_t> arena_;
};

/// One-shot evaluation with a fresh memo.
bool evaluate(const Graph& g, const Formula& f, const Assignment& env = {});

}  // namespace gspec
