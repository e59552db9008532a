#pragma once

#include "gspec/formula.hpp"
#include "gspec/intersection_array.hpp"

#include <map>
#include <tuple>

namespace gspec {

/// Builds the three-variable counting families in one shared store, so that
/// every member reuses the subformulas of the others. All formulas use only
/// the variables x, y, z.
class CountingFormulaFactory {
 public:
  explicit CountingFormulaFactory(std::size_t node_budget = kDefaultNodeBudget);

  VarId x() const { return x_; }
  VarId y() const { return y_; }
  VarId z() const { return z_; }

  /// ψ_ℓ^r(a, b): exactly r walks of length ℓ from a to b (ℓ ≥ 1, r ≥ 0).
  NodeId walk(int length, int r, VarId a, VarId b);
  /// φ_ℓ^r: exactly r closed walks of length ℓ in total.
  NodeId closed_walks(int length, int r);
  /// φ_i(a, b): some walk of length i joins a and b.
  NodeId path(int i, VarId a, VarId b);
  /// δ_i(a, b): dist(a, b) = i.
  NodeId distance(int i, VarId a, VarId b);
  /// γ_i^r: for all x, y at distance i, y has exactly r neighbors at
  /// distance i-1 from x.
  NodeId gamma(int i, int r);
  /// β_i^r: the same with distance i+1.
  NodeId beta(int i, int r);
  /// Holds exactly in the distance-regular graphs with array `arr`.
  NodeId drg_sentence(const IntersectionArray& arr);

  Formula formula(NodeId root) const { return builder_.formula(root); }
  FormulaBuilder& builder() { return builder_; }
  std::shared_ptr<const FormulaStore> shared_store() const { return builder_.shared_store(); }

 private:
  VarId third(VarId a, VarId b) const;
  NodeId count_neighbors(VarId a, VarId c, NodeId inner, int times);

  FormulaBuilder builder_;
  VarId x_, y_, z_;
  std::map<std::tuple<int, int, VarId, VarId>, NodeId> walk_memo_;
  std::map<std::pair<int, int>, NodeId> closed_memo_;
  std::map<std::tuple<int, VarId, VarId>, NodeId> path_memo_;
  std::map<std::tuple<int, VarId, VarId>, NodeId> distance_memo_;
};

Formula build_walk_formula(int length, int r, std::size_t node_budget = kDefaultNodeBudget);
Formula build_closed_walk_sentence(int length, int r, std::size_t node_budget = kDefaultNodeBudget);
Formula build_distance_formula(int i);
Formula build_drg_sentence(const IntersectionArray& arr);

}  // namespace gspec
