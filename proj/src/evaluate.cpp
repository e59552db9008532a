#include "gspec/evaluate.hpp"

#include "gspec/errors.hpp"

#include <bit>
#include <limits>

namespace gspec {

namespace {

constexpr std::uint64_t kUnallocated = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint64_t kNoMemo = kUnallocated - 1;
constexpr std::uint64_t kMaxCellsPerNode = 1u << 16;
constexpr std::uint64_t kMaxArena = std::uint64_t{1} << 32;

}  // namespace

Evaluator::Evaluator(const Graph& g, std::shared_ptr<const FormulaStore> store)
    : g_(g), store_(std::move(store)), env_(kMaxVariables, -1) {}

void Evaluator::bind(const Formula& f, const Assignment& env) {
  if (f.shared_store() != store_) throw PreconditionError("formula was built in a different store");
  std::fill(env_.begin(), env_.end(), -1);
  const auto& names = store_->variable_names();
  for (const auto& [name, vertex] : env) {
    if (vertex < 0 || vertex >= g_.order()) {
      throw PreconditionError("vertex " + std::to_string(vertex) + " bound to '" + name + "' is out of range");
    }
    for (std::size_t v = 0; v < names.size(); ++v) {
      if (names[v] == name) env_[v] = vertex;
    }
  }
  const std::uint64_t free = f.node().free_vars;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if ((free >> v) & 1u && env_[v] < 0) {
      throw PreconditionError("free variable '" + names[v] + "' is unbound");
    }
  }
  if (memo_offset_.size() < store_->size()) memo_offset_.resize(store_->size(), kUnallocated);
}

bool Evaluator::evaluate(const Formula& f, const Assignment& env) {
  bind(f, env);
  return eval(f.root());
}

std::optional<std::size_t> Evaluator::top_level_witnesses(const Formula& f, const Assignment& env) {
  bind(f, env);
  const auto& node = f.node();
  switch (node.kind) {
    case NodeKind::Exists:
    case NodeKind::Forall:
    case NodeKind::CountAtLeast:
    case NodeKind::CountExact:
      return count_witnesses(node.var, store_->children(f.root())[0], std::numeric_limits<std::size_t>::max());
    default:
      return std::nullopt;
  }
}

std::int8_t* Evaluator::memo_slot(NodeId id, const FormulaNode& node) {
  std::uint64_t& off = memo_offset_[id];
  if (off == kNoMemo) return nullptr;
  const auto n = static_cast<std::uint64_t>(g_.order());
  if (off == kUnallocated) {
    std::uint64_t cells = 1;
    for (std::uint64_t m = node.free_vars; m; m &= m - 1) {
      cells *= n;
      if (cells > kMaxCellsPerNode) break;
    }
    if (cells > kMaxCellsPerNode || arena_.size() + cells > kMaxArena) {
      off = kNoMemo;
      return nullptr;
    }
    off = arena_.size();
    arena_.resize(arena_.size() + cells, 0);
  }
  std::uint64_t key = 0;
  for (std::uint64_t m = node.free_vars; m; m &= m - 1) {
    key = key * n + static_cast<std::uint64_t>(env_[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return arena_.data() + off + key;
}

std::size_t Evaluator::count_witnesses(VarId v, NodeId body, std::size_t stop_at) {
  const Vertex saved = env_[v];
  std::size_t count = 0;
  for (Vertex w = 0; w < g_.order() && count < stop_at; ++w) {
    env_[v] = w;
    if (eval(body)) ++count;
  }
  env_[v] = saved;
  return count;
}

bool Evaluator::eval(NodeId id) {
  const FormulaNode node = store_->node(id);
  switch (node.kind) {
    case NodeKind::Edge:
      return g_.has_edge(env_[node.var], env_[node.var2]);
    case NodeKind::Eq:
      return env_[node.var] == env_[node.var2];
    case NodeKind::Bottom:
      return false;
    default:
      break;
  }
  std::int8_t* slot = memo_slot(id, node);
  if (slot && *slot) return *slot > 0;
  const auto kids = store_->children(id);
  bool result = false;
  switch (node.kind) {
    case NodeKind::Not:
      result = !eval(kids[0]);
      break;
    case NodeKind::And:
      result = true;
      for (NodeId c : kids) {
        if (!eval(c)) {
          result = false;
          break;
        }
      }
      break;
    case NodeKind::Or:
      for (NodeId c : kids) {
        if (eval(c)) {
          result = true;
          break;
        }
      }
      break;
    case NodeKind::Implies:
      result = !eval(kids[0]) || eval(kids[1]);
      break;
    case NodeKind::Exists:
      result = count_witnesses(node.var, kids[0], 1) >= 1;
      break;
    case NodeKind::Forall: {
      const Vertex saved = env_[node.var];
      result = true;
      for (Vertex w = 0; w < g_.order(); ++w) {
        env_[node.var] = w;
        if (!eval(kids[0])) {
          result = false;
          break;
        }
      }
      env_[node.var] = saved;
      break;
    }
    case NodeKind::CountAtLeast:
      result = count_witnesses(node.var, kids[0], node.count) >= node.count;
      break;
    case NodeKind::CountExact:
      result = count_witnesses(node.var, kids[0], std::numeric_limits<std::size_t>::max()) == node.count;
      break;
    default:
      break;
  }
  // The child calls may have grown the arena, so the slot is looked up again.
  if (slot) *memo_slot(id, node) = result ? 1 : -1;
  return result;
}

bool evaluate(const Graph& g, const Formula& f, const Assignment& env) {
  Evaluator ev(g, f.shared_store());
  return ev.evaluate(f, env);
}

}  // namespace gspec
