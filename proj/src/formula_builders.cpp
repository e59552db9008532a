#include "gspec/formula_builders.hpp"

#include "gspec/errors.hpp"
#include "gspec/partitions.hpp"

#include <functional>

namespace gspec {

namespace {

// Partitions of r using only the given parts (listed in decreasing order).
void for_each_restricted_partition(int r, const std::vector<int>& parts,
                                   const std::function<void(const Partition&)>& visit) {
  Partition current;
  std::function<void(int, std::size_t)> rec = [&](int remaining, std::size_t from) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    for (std::size_t i = from; i < parts.size(); ++i) {
      const int part = parts[i];
      if (part > remaining) continue;
      for (int mult = remaining / part; mult >= 1; --mult) {
        current.push_back({part, mult});
        rec(remaining - part * mult, i + 1);
        current.pop_back();
      }
    }
  };
  rec(r, 0);
}

}  // namespace

CountingFormulaFactory::CountingFormulaFactory(std::size_t node_budget) : builder_(node_budget) {
  x_ = builder_.variable("x");
  y_ = builder_.variable("y");
  z_ = builder_.variable("z");
}

VarId CountingFormulaFactory::third(VarId a, VarId b) const {
  for (VarId v : {x_, y_, z_}) {
    if (v != a && v != b) return v;
  }
  throw PreconditionError("third variable needs two distinct variables");
}

NodeId CountingFormulaFactory::count_neighbors(VarId a, VarId c, NodeId inner, int times) {
  auto& b = builder_;
  return b.count_exact(static_cast<std::uint32_t>(times), c, b.conjunction({b.edge(a, c), inner}));
}

NodeId CountingFormulaFactory::walk(int length, int r, VarId a, VarId b) {
  if (length < 1 || r < 0) throw PreconditionError("walk formula needs length >= 1 and r >= 0");
  const auto key = std::make_tuple(length, r, a, b);
  if (auto it = walk_memo_.find(key); it != walk_memo_.end()) return it->second;
  auto& fb = builder_;
  NodeId result;
  if (length == 1) {
    result = r == 0 ? fb.negate(fb.edge(a, b)) : r == 1 ? fb.edge(a, b) : fb.bottom();
  } else {
    const VarId c = third(a, b);
    const NodeId zero = walk(length - 1, 0, c, b);
    if (r == 0) {
      result = fb.forall(c, fb.implies(fb.edge(a, c), zero));
    } else {
      // Parts whose walk formula is ⊥ can only produce ⊥ disjuncts.
      std::vector<int> parts;
      for (int p = r; p >= 1; --p) {
        if (walk(length - 1, p, c, b) != fb.bottom()) parts.push_back(p);
      }
      std::vector<NodeId> disjuncts;
      for_each_restricted_partition(r, parts, [&](const Partition& partition) {
        std::vector<NodeId> conj;
        std::vector<NodeId> allowed{zero};
        for (const auto& [part, mult] : partition) {
          const NodeId sub = walk(length - 1, part, c, b);
          conj.push_back(count_neighbors(a, c, sub, mult));
          allowed.push_back(sub);
        }
        conj.push_back(fb.forall(c, fb.implies(fb.edge(a, c), fb.disjunction(std::move(allowed)))));
        disjuncts.push_back(fb.conjunction(std::move(conj)));
      });
      result = fb.disjunction(std::move(disjuncts));
    }
  }
  walk_memo_.emplace(key, result);
  return result;
}

NodeId CountingFormulaFactory::closed_walks(int length, int r) {
  if (length < 1 || r < 0) throw PreconditionError("closed-walk sentence needs length >= 1 and r >= 0");
  const auto key = std::make_pair(length, r);
  if (auto it = closed_memo_.find(key); it != closed_memo_.end()) return it->second;
  auto& fb = builder_;
  // ∃y (x = y ∧ ψ(x, y)) reads ψ on the diagonal.
  auto diagonal = [&](int count) { return fb.exists(y_, fb.conjunction({fb.eq(x_, y_), walk(length, count, x_, y_)})); };
  std::vector<int> parts;
  for (int p = r; p >= 1; --p) {
    if (walk(length, p, x_, y_) != fb.bottom()) parts.push_back(p);
  }
  std::vector<NodeId> disjuncts;
  for_each_restricted_partition(r, parts, [&](const Partition& partition) {
    std::vector<NodeId> conj;
    std::vector<NodeId> allowed{walk(length, 0, x_, y_)};
    for (const auto& [part, mult] : partition) {
      conj.push_back(fb.count_exact(static_cast<std::uint32_t>(mult), x_, diagonal(part)));
      allowed.push_back(walk(length, part, x_, y_));
    }
    conj.push_back(fb.forall(x_, fb.exists(y_, fb.conjunction({fb.eq(x_, y_), fb.disjunction(std::move(allowed))}))));
    disjuncts.push_back(fb.conjunction(std::move(conj)));
  });
  const NodeId result = fb.disjunction(std::move(disjuncts));
  closed_memo_.emplace(key, result);
  return result;
}

NodeId CountingFormulaFactory::path(int i, VarId a, VarId b) {
  if (i < 0) throw PreconditionError("path formula needs i >= 0");
  const auto key = std::make_tuple(i, a, b);
  if (auto it = path_memo_.find(key); it != path_memo_.end()) return it->second;
  auto& fb = builder_;
  NodeId result;
  if (i == 0) {
    result = fb.eq(a, b);
  } else if (i == 1) {
    result = fb.edge(a, b);
  } else {
    // φ_i(a,b) = ∃c[E(a,c) ∧ ∃a(c = a ∧ φ_{i-1}(a,b))]: the name a is rebound
    // to the value of c, so three names suffice for any i.
    const VarId c = third(a, b);
    result = fb.exists(c, fb.conjunction({fb.edge(a, c), fb.exists(a, fb.conjunction({fb.eq(c, a), path(i - 1, a, b)}))}));
  }
  path_memo_.emplace(key, result);
  return result;
}

NodeId CountingFormulaFactory::distance(int i, VarId a, VarId b) {
  if (i < 0) throw PreconditionError("distance formula needs i >= 0");
  const auto key = std::make_tuple(i, a, b);
  if (auto it = distance_memo_.find(key); it != distance_memo_.end()) return it->second;
  auto& fb = builder_;
  std::vector<NodeId> conj{path(i, a, b)};
  for (int j = 0; j < i; ++j) conj.push_back(fb.negate(path(j, a, b)));
  const NodeId result = fb.conjunction(std::move(conj));
  distance_memo_.emplace(key, result);
  return result;
}

NodeId CountingFormulaFactory::gamma(int i, int r) {
  if (i < 1) throw PreconditionError("gamma needs i >= 1");
  auto& fb = builder_;
  return fb.forall(x_, fb.forall(y_, fb.implies(distance(i, x_, y_), count_neighbors(y_, z_, distance(i - 1, x_, z_), r))));
}

NodeId CountingFormulaFactory::beta(int i, int r) {
  if (i < 0) throw PreconditionError("beta needs i >= 0");
  auto& fb = builder_;
  return fb.forall(x_, fb.forall(y_, fb.implies(distance(i, x_, y_), count_neighbors(y_, z_, distance(i + 1, x_, z_), r))));
}

NodeId CountingFormulaFactory::drg_sentence(const IntersectionArray& arr) {
  arr.validate();
  auto& fb = builder_;
  const int d = arr.diameter();
  std::vector<NodeId> conj;
  for (int i = 1; i <= d; ++i) {
    conj.push_back(beta(i - 1, arr.b_at(i - 1)));
    conj.push_back(gamma(i, arr.c_at(i)));
  }
  conj.push_back(fb.exists(x_, fb.exists(y_, distance(d, x_, y_))));
  conj.push_back(fb.negate(fb.exists(x_, fb.exists(y_, distance(d + 1, x_, y_)))));
  std::vector<NodeId> within;
  for (int i = 0; i <= d; ++i) within.push_back(distance(i, x_, y_));
  conj.push_back(fb.forall(x_, fb.forall(y_, fb.disjunction(std::move(within)))));
  return fb.conjunction(std::move(conj));
}

Formula build_walk_formula(int length, int r, std::size_t node_budget) {
  CountingFormulaFactory f(node_budget);
  return f.formula(f.walk(length, r, f.x(), f.y()));
}

Formula build_closed_walk_sentence(int length, int r, std::size_t node_budget) {
  CountingFormulaFactory f(node_budget);
  return f.formula(f.closed_walks(length, r));
}

Formula build_distance_formula(int i) {
  CountingFormulaFactory f;
  return f.formula(f.distance(i, f.x(), f.y()));
}

Formula build_drg_sentence(const IntersectionArray& arr) {
  CountingFormulaFactory f;
  return f.formula(f.drg_sentence(arr));
}

}  // namespace gspec
