#include "gspec/formula.hpp"

#include "gspec/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace gspec {

namespace {

constexpr NodeId kEmptySlot = std::numeric_limits<NodeId>::max();

std::uint64_t bit(VarId v) { return std::uint64_t{1} << v; }

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t hash_node(const FormulaNode& n, std::span<const NodeId> children) {
  std::uint64_t h = static_cast<std::uint64_t>(n.kind);
  h = mix(h, n.var);
  h = mix(h, n.var2);
  h = mix(h, n.count);
  for (NodeId c : children) h = mix(h, c);
  return h * 0xff51afd7ed558ccdULL;
}

}  // namespace

FormulaBuilder::FormulaBuilder(std::size_t node_budget)
    : store_(std::make_shared<FormulaStore>()), budget_(node_budget) {
  store_->table_.assign(1024, kEmptySlot);
  bottom_id_ = intern(FormulaNode{NodeKind::Bottom}, {});
}

VarId FormulaBuilder::variable(const std::string& name) {
  auto& names = store_->names_;
  if (auto it = std::find(names.begin(), names.end(), name); it != names.end()) {
    return static_cast<VarId>(it - names.begin());
  }
  if (names.size() >= kMaxVariables) {
    throw ResourceLimitError("formula uses more than " + std::to_string(kMaxVariables) + " variables");
  }
  names.push_back(name);
  return static_cast<VarId>(names.size() - 1);
}

void FormulaBuilder::grow_table() {
  auto& s = *store_;
  std::vector<NodeId> fresh(s.table_.size() * 2, kEmptySlot);
  const std::size_t mask = fresh.size() - 1;
  for (NodeId id : s.table_) {
    if (id == kEmptySlot) continue;
    std::size_t slot = hash_node(s.nodes_[id], s.children(id)) & mask;
    while (fresh[slot] != kEmptySlot) slot = (slot + 1) & mask;
    fresh[slot] = id;
  }
  s.table_.swap(fresh);
}

NodeId FormulaBuilder::intern(FormulaNode node, std::span<const NodeId> children) {
  auto& s = *store_;
  const std::size_t mask = s.table_.size() - 1;
  std::size_t slot = hash_node(node, children) & mask;
  while (s.table_[slot] != kEmptySlot) {
    const NodeId id = s.table_[slot];
    const auto& other = s.nodes_[id];
    if (other.kind == node.kind && other.var == node.var && other.var2 == node.var2 && other.count == node.count) {
      const auto oc = s.children(id);
      if (std::equal(oc.begin(), oc.end(), children.begin(), children.end())) return id;
    }
    slot = (slot + 1) & mask;
  }
  if (s.nodes_.size() >= budget_) {
    throw ResourceLimitError("formula exceeds the node budget of " + std::to_string(budget_) +
                             " nodes (counting-partition blow-up); raise the budget to build it");
  }
  node.child_begin = static_cast<std::uint32_t>(s.children_.size());
  node.child_count = static_cast<std::uint32_t>(children.size());
  s.children_.insert(s.children_.end(), children.begin(), children.end());
  const auto id = static_cast<NodeId>(s.nodes_.size());
  s.nodes_.push_back(node);
  s.table_[slot] = id;
  if (2 * s.nodes_.size() > s.table_.size()) grow_table();
  return id;
}

NodeId FormulaBuilder::edge(VarId a, VarId b) {
  FormulaNode n{NodeKind::Edge, a, b};
  n.free_vars = bit(a) | bit(b);
  return intern(n, {});
}

NodeId FormulaBuilder::eq(VarId a, VarId b) {
  FormulaNode n{NodeKind::Eq, a, b};
  n.free_vars = bit(a) | bit(b);
  return intern(n, {});
}

NodeId FormulaBuilder::bottom() { return bottom_id_; }

NodeId FormulaBuilder::top() { return intern(FormulaNode{NodeKind::And}, {}); }

NodeId FormulaBuilder::negate(NodeId f) {
  FormulaNode n{NodeKind::Not};
  n.free_vars = store_->node(f).free_vars;
  const NodeId kids[] = {f};
  return intern(n, kids);
}

NodeId FormulaBuilder::conjunction(std::vector<NodeId> fs) {
  if (std::find(fs.begin(), fs.end(), bottom_id_) != fs.end()) return bottom_id_;
  if (fs.size() == 1) return fs.front();
  FormulaNode n{NodeKind::And};
  for (NodeId f : fs) n.free_vars |= store_->node(f).free_vars;
  return intern(n, fs);
}

NodeId FormulaBuilder::disjunction(std::vector<NodeId> fs) {
  fs.erase(std::remove(fs.begin(), fs.end(), bottom_id_), fs.end());
  if (fs.empty()) return bottom_id_;
  if (fs.size() == 1) return fs.front();
  FormulaNode n{NodeKind::Or};
  for (NodeId f : fs) n.free_vars |= store_->node(f).free_vars;
  return intern(n, fs);
}

NodeId FormulaBuilder::implies(NodeId premise, NodeId conclusion) {
  FormulaNode n{NodeKind::Implies};
  n.free_vars = store_->node(premise).free_vars | store_->node(conclusion).free_vars;
  const NodeId kids[] = {premise, conclusion};
  return intern(n, kids);
}

NodeId FormulaBuilder::exists(VarId v, NodeId f) {
  if (f == bottom_id_) return bottom_id_;
  FormulaNode n{NodeKind::Exists, v};
  n.free_vars = store_->node(f).free_vars & ~bit(v);
  const NodeId kids[] = {f};
  return intern(n, kids);
}

NodeId FormulaBuilder::forall(VarId v, NodeId f) {
  FormulaNode n{NodeKind::Forall, v};
  n.free_vars = store_->node(f).free_vars & ~bit(v);
  const NodeId kids[] = {f};
  return intern(n, kids);
}

NodeId FormulaBuilder::count_at_least(std::uint32_t r, VarId v, NodeId f) {
  if (f == bottom_id_ && r >= 1) return bottom_id_;
  FormulaNode n{NodeKind::CountAtLeast, v, 0, r};
  n.free_vars = store_->node(f).free_vars & ~bit(v);
  const NodeId kids[] = {f};
  return intern(n, kids);
}

NodeId FormulaBuilder::count_exact(std::uint32_t r, VarId v, NodeId f) {
  if (f == bottom_id_ && r >= 1) return bottom_id_;
  FormulaNode n{NodeKind::CountExact, v, 0, r};
  n.free_vars = store_->node(f).free_vars & ~bit(v);
  const NodeId kids[] = {f};
  return intern(n, kids);
}

std::vector<std::string> Formula::free_variables() const {
  std::vector<std::string> out;
  const std::uint64_t mask = node().free_vars;
  for (std::size_t v = 0; v < store_->variable_names().size(); ++v) {
    if (mask & bit(static_cast<VarId>(v))) out.push_back(store_->variable_name(static_cast<VarId>(v)));
  }
  return out;
}

namespace {

template <typename Visit>
void for_each_reachable(const Formula& f, Visit visit) {
  const auto& s = f.store();
  std::vector<char> seen(s.size(), 0);
  std::vector<NodeId> stack{f.root()};
  seen[f.root()] = 1;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    visit(id, s.node(id));
    for (NodeId c : s.children(id)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
}

}  // namespace

std::size_t Formula::dag_size() const {
  std::size_t count = 0;
  for_each_reachable(*this, [&](NodeId, const FormulaNode&) { ++count; });
  return count;
}

std::size_t count_variables(const Formula& f) {
  std::uint64_t used = 0;
  for_each_reachable(f, [&](NodeId, const FormulaNode& n) {
    switch (n.kind) {
      case NodeKind::Edge:
      case NodeKind::Eq:
        used |= bit(n.var) | bit(n.var2);
        break;
      case NodeKind::Exists:
      case NodeKind::Forall:
      case NodeKind::CountAtLeast:
      case NodeKind::CountExact:
        used |= bit(n.var);
        break;
      default:
        break;
    }
  });
  return static_cast<std::size_t>(std::popcount(used));
}

namespace {

// Precedence: 0 implication, 1 disjunction, 2 conjunction, 3 unary / atoms.
// A quantifier body extends as far right as possible, so a quantifier prints
// bare only when nothing follows it inside the enclosing parentheses
// (`tail`).
class Printer {
 public:
  Printer(const FormulaStore& s, std::size_t max_length) : s_(s), max_(max_length) {}

  void print(NodeId id, int context, bool tail) {
    const auto& n = s_.node(id);
    const auto kids = s_.children(id);
    if (out_.size() > max_) {
      throw ResourceLimitError("formula text exceeds " + std::to_string(max_) + " characters");
    }
    switch (n.kind) {
      case NodeKind::Edge:
        out_ += "E(" + name(n.var) + "," + name(n.var2) + ")";
        return;
      case NodeKind::Eq:
        out_ += name(n.var) + "=" + name(n.var2);
        return;
      case NodeKind::Bottom:
        out_ += "false";
        return;
      case NodeKind::Not:
        out_ += "!";
        print(kids[0], 3, tail);
        return;
      case NodeKind::And:
        if (kids.empty()) {
          out_ += "true";
          return;
        }
        binary(kids, " & ", 2, context, tail);
        return;
      case NodeKind::Or:
        binary(kids, " | ", 1, context, tail);
        return;
      case NodeKind::Implies: {
        const bool paren = context > 0;
        if (paren) out_ += "(";
        print(kids[0], 1, false);
        out_ += " -> ";
        print(kids[1], 0, paren || tail);
        if (paren) out_ += ")";
        return;
      }
      default:
        break;
    }
    if (!tail) out_ += "(";
    if (n.kind == NodeKind::Forall) {
      out_ += "forall ";
    } else if (n.kind == NodeKind::Exists) {
      out_ += "exists ";
    } else if (n.kind == NodeKind::CountAtLeast) {
      out_ += "exists>=" + std::to_string(n.count) + " ";
    } else {
      out_ += "exists=" + std::to_string(n.count) + " ";
    }
    out_ += name(n.var) + ". ";
    print(kids[0], 0, true);
    if (!tail) out_ += ")";
  }

  std::string take() { return std::move(out_); }

 private:
  void binary(std::span<const NodeId> kids, const char* op, int level, int context, bool tail) {
    const bool paren = context > level;
    if (paren) out_ += "(";
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out_ += op;
      print(kids[i], level + 1, i + 1 == kids.size() && (paren || tail));
    }
    if (paren) out_ += ")";
  }

  std::string name(VarId v) const { return s_.variable_name(v); }

  const FormulaStore& s_;
  std::size_t max_;
  std::string out_;
};

}  // namespace

std::string to_string(const Formula& f, std::size_t max_length) {
  Printer p(f.store(), max_length);
  p.print(f.root(), 0, true);
  return p.take();
}

}  // namespace gspec
