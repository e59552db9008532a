#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace gspec {

enum class NodeKind : std::uint8_t {
  Edge,          // E(a, b)
  Eq,            // a = b
  Bottom,        // false
  Not,
  And,           // empty conjunction is true
  Or,
  Implies,
  Exists,        // ∃ var . child
  Forall,        // ∀ var . child
  CountAtLeast,  // ∃^{≥count} var . child
  CountExact,    // ∃^{=count} var . child, i.e. ∃^{≥r} ∧ ¬∃^{≥r+1}
};

using NodeId = std::uint32_t;
using VarId = std::uint8_t;

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

struct FormulaNode {
  NodeKind kind = NodeKind::Bottom;
  VarId var = 0;    // quantified variable, or first atom argument
  VarId var2 = 0;   // second atom argument
  std::uint32_t count = 0;
  std::uint32_t child_begin = 0;
  std::uint32_t child_count = 0;
  std::uint64_t free_vars = 0;  // bit i set iff variable i occurs free
};

/// Append-only node storage shared by every formula built from it. Each
/// structurally distinct subformula is stored exactly once, so the formula
/// families built here (whose trees are exponentially large) stay compact
/// DAGs. A node never changes after it is appended.
class FormulaStore {
 public:
  const FormulaNode& node(NodeId id) const { return nodes_[id]; }
  std::span<const NodeId> children(NodeId id) const {
    const auto& n = nodes_[id];
    return {children_.data() + n.child_begin, n.child_count};
  }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::string& variable_name(VarId v) const { return names_[v]; }

 private:
  friend class FormulaBuilder;

  std::vector<FormulaNode> nodes_;
  std::vector<NodeId> children_;
  std::vector<std::string> names_;
  std::vector<NodeId> table_;  // open-addressing hash-cons index
};

/// A handle on one root inside a store.
class Formula {
 public:
  Formula() = default;
  Formula(std::shared_ptr<const FormulaStore> store, NodeId root) : store_(std::move(store)), root_(root) {}

  const FormulaStore& store() const { return *store_; }
  const std::shared_ptr<const FormulaStore>& shared_store() const { return store_; }
  NodeId root() const { return root_; }
  const FormulaNode& node() const { return store_->node(root_); }

  bool is_sentence() const { return node().free_vars == 0; }
  std::vector<std::string> free_variables() const;
  /// Number of distinct nodes reachable from the root.
  std::size_t dag_size() const;

 private:
  std::shared_ptr<const FormulaStore> store_;
  NodeId root_ = 0;
};

/// Smart constructors over a shared store. Structurally equal nodes are
/// merged. The only rewrites applied are the ⊥ absorptions
///   A ∧ ⊥ = ⊥,  A ∨ ⊥ = A,  ∃v ⊥ = ⊥,  ∃^{≥r}v ⊥ = ∃^{=r}v ⊥ = ⊥ (r ≥ 1),
/// and one-element ∧/∨ collapse to their operand.
class FormulaBuilder {
 public:
  explicit FormulaBuilder(std::size_t node_budget = kDefaultNodeBudget);

  VarId variable(const std::string& name);

  NodeId edge(VarId a, VarId b);
  NodeId eq(VarId a, VarId b);
  NodeId bottom();
  NodeId top();
  NodeId negate(NodeId f);
  NodeId conjunction(std::vector<NodeId> fs);
  NodeId disjunction(std::vector<NodeId> fs);
  NodeId implies(NodeId premise, NodeId conclusion);
  NodeId exists(VarId v, NodeId f);
  NodeId forall(VarId v, NodeId f);
  NodeId count_at_least(std::uint32_t r, VarId v, NodeId f);
  NodeId count_exact(std::uint32_t r, VarId v, NodeId f);

  Formula formula(NodeId root) const { return Formula(store_, root); }
  const FormulaStore& store() const { return *store_; }
  std::shared_ptr<const FormulaStore> shared_store() const { return store_; }
  std::size_t node_budget() const { return budget_; }

 private:
  NodeId intern(FormulaNode node, std::span<const NodeId> children);
  void grow_table();

  std::shared_ptr<FormulaStore> store_;
  std::size_t budget_;
  NodeId bottom_id_;
};

/// Number of distinct variable names used anywhere in f (bound or free).
std::size_t count_variables(const Formula& f);

/// Concrete syntax accepted by parse_formula. Throws ResourceLimitError if
/// the tree expansion would exceed `max_length` characters.
std::string to_string(const Formula& f, std::size_t max_length = 64u << 20);

}  // namespace gspec
