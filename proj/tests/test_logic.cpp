#include "doctest.h"
#include "oracles.hpp"

#include "gspec/algebraic.hpp"
#include "gspec/enumerate.hpp"
#include "gspec/errors.hpp"
#include "gspec/evaluate.hpp"
#include "gspec/formula.hpp"
#include "gspec/formula_builders.hpp"
#include "gspec/formula_parser.hpp"
#include "gspec/generators.hpp"
#include "gspec/intersection_array.hpp"
#include "gspec/partitions.hpp"

#include <random>
#include <set>

using namespace gspec;

namespace {

Graph two_triangles() { return disjoint_union(complete_graph(3), complete_graph(3)); }

std::size_t formula_error_offset(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

// Direct recursive semantics over the store, with no memo and no early exit.
bool naive_eval(const FormulaStore& s, NodeId id, const Graph& g, std::vector<Vertex>& env) {
  const FormulaNode& n = s.node(id);
  const auto kids = s.children(id);
  switch (n.kind) {
    case NodeKind::Edge:
      return g.has_edge(env[n.var], env[n.var2]);
    case NodeKind::Eq:
      return env[n.var] == env[n.var2];
    case NodeKind::Bottom:
      return false;
    case NodeKind::Not:
      return !naive_eval(s, kids[0], g, env);
    case NodeKind::And: {
      bool all = true;
      for (NodeId c : kids) all = naive_eval(s, c, g, env) && all;
      return all;
    }
    case NodeKind::Or: {
      bool any = false;
      for (NodeId c : kids) any = naive_eval(s, c, g, env) || any;
      return any;
    }
    case NodeKind::Implies:
      return !naive_eval(s, kids[0], g, env) || naive_eval(s, kids[1], g, env);
    default:
      break;
  }
  const Vertex saved = env[n.var];
  std::uint32_t witnesses = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    env[n.var] = w;
    if (naive_eval(s, kids[0], g, env)) ++witnesses;
  }
  env[n.var] = saved;
  const auto total = static_cast<std::uint32_t>(g.order());
  switch (n.kind) {
    case NodeKind::Exists:
      return witnesses >= 1;
    case NodeKind::Forall:
      return witnesses == total;
    case NodeKind::CountAtLeast:
      return witnesses >= n.count;
    default:
      return witnesses == n.count;
  }
}

class RandomFormulas {
 public:
  RandomFormulas(FormulaBuilder& b, std::uint64_t seed) : b_(b), rng_(seed) {
    for (const char* name : {"x", "y", "z"}) vars_.push_back(b_.variable(name));
  }

  NodeId next(int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
    switch (pick(rng_)) {
      case 0:
        return b_.edge(var(), var());
      case 1:
        return b_.eq(var(), var());
      case 2:
        return b_.negate(next(depth - 1));
      case 3:
        return b_.conjunction({next(depth - 1), next(depth - 1)});
      case 4:
        return b_.disjunction({next(depth - 1), next(depth - 1)});
      case 5:
        return b_.implies(next(depth - 1), next(depth - 1));
      case 6:
        return b_.exists(var(), next(depth - 1));
      case 7:
        return b_.forall(var(), next(depth - 1));
      case 8:
        return b_.count_at_least(count(), var(), next(depth - 1));
      default:
        return b_.count_exact(count(), var(), next(depth - 1));
    }
  }

  VarId var() { return vars_[std::uniform_int_distribution<std::size_t>(0, 2)(rng_)]; }
  std::uint32_t count() { return std::uniform_int_distribution<std::uint32_t>(0, 4)(rng_); }

 private:
  FormulaBuilder& b_;
  std::mt19937_64 rng_;
  std::vector<VarId> vars_;
};

std::vector<Graph> corpus(int min_n, int max_n) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("parse examples") {
  const Formula complete = parse_formula("forall x. forall y. (x=y | E(x,y))");
  CHECK(complete.is_sentence());
  CHECK(count_variables(complete) == 2);
  const Formula deg = parse_formula("exists>=2 y. E(x,y)");
  CHECK(deg.free_variables() == std::vector<std::string>{"x"});
  CHECK(deg.node().kind == NodeKind::CountAtLeast);
  CHECK(deg.node().count == 2);
  CHECK(count_variables(parse_formula("forall x. E(x,x)")) == 1);
  CHECK(parse_formula("true").node().kind == NodeKind::And);
  CHECK(parse_formula("false").node().kind == NodeKind::Bottom);
  CHECK(parse_formula("exists=0 x1. x1=x1").node().kind == NodeKind::CountExact);
}

TEST_CASE("parse errors carry offsets") {
  CHECK(formula_error_offset("E(x,y") == 6);
  CHECK(formula_error_offset("") == 1);
  CHECK(formula_error_offset("x=") == 3);
  CHECK(formula_error_offset("E(x,y) &") == 9);
  CHECK(formula_error_offset("exists>= x. E(x,x)") == 10);
  CHECK(formula_error_offset("E(x,y) E(x,y)") == 8);
  CHECK(formula_error_offset("(x=y") == 5);
  CHECK(formula_error_offset("forall X. x=x") == 8);
  try {
    parse_formula("E(x,y");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
  }
}

TEST_CASE("operator precedence and associativity") {
  auto kinds = [](const std::string& text) {
    const Formula f = parse_formula(text);
    std::vector<NodeKind> out{f.node().kind};
    for (NodeId c : f.store().children(f.root())) out.push_back(f.store().node(c).kind);
    return out;
  };
  CHECK(kinds("x=y | x=z & E(x,y)") == std::vector<NodeKind>{NodeKind::Or, NodeKind::Eq, NodeKind::And});
  CHECK(kinds("!x=y & E(x,y)") == std::vector<NodeKind>{NodeKind::And, NodeKind::Not, NodeKind::Edge});
  CHECK(kinds("x=y -> x=z -> E(x,y)") == std::vector<NodeKind>{NodeKind::Implies, NodeKind::Eq, NodeKind::Implies});
  CHECK(kinds("x=y | x=z -> E(x,y)") == std::vector<NodeKind>{NodeKind::Implies, NodeKind::Or, NodeKind::Edge});
  CHECK(kinds("exists x. x=y & E(x,y)") == std::vector<NodeKind>{NodeKind::Exists, NodeKind::And});
  CHECK(kinds("(exists x. x=y) & E(x,y)") == std::vector<NodeKind>{NodeKind::And, NodeKind::Exists, NodeKind::Edge});
}

TEST_CASE("printing round trips through the parser") {
  for (const char* text : {"forall x. forall y. (x=y | E(x,y))", "!(x=y & E(x,y)) -> exists=2 z. E(x,z) & E(z,y)",
                           "(exists x. E(x,y)) | x=y", "(x=y -> E(x,y)) -> false", "!!x=y", "true & x=y"}) {
    const std::string once = to_string(parse_formula(text));
    CHECK(to_string(parse_formula(once)) == once);
  }
  FormulaBuilder b;
  RandomFormulas gen(b, 3);
  const std::vector<Graph> graphs = {path_graph(3), cycle_graph(4), complete_graph(3)};
  for (int i = 0; i < 200; ++i) {
    const Formula f = b.formula(gen.next(4));
    const std::string text = to_string(f);
    const Formula g = parse_formula(text);
    CHECK(to_string(g) == text);
    CHECK(g.dag_size() == f.dag_size());
  }
}

TEST_CASE("evaluation examples") {
  const Formula complete = parse_formula("forall x. forall y. (x=y | E(x,y))");
  CHECK(evaluate(complete_graph(3), complete));
  CHECK_FALSE(evaluate(path_graph(3), complete));
  const Formula two_regular = parse_formula("exists=6 x. exists=2 y. E(x,y)");
  CHECK(evaluate(cycle_graph(6), two_regular));
  CHECK_FALSE(evaluate(path_graph(6), two_regular));
  Evaluator ev(cycle_graph(6), two_regular.shared_store());
  CHECK(ev.top_level_witnesses(two_regular) == std::optional<std::size_t>(6));
  const Formula deg = parse_formula("exists>=2 y. E(x,y)");
  CHECK(evaluate(path_graph(3), deg, {{"x", 1}}));
  CHECK_FALSE(evaluate(path_graph(3), deg, {{"x", 0}}));
  CHECK(evaluate(Graph(0), parse_formula("forall x. false")));
  CHECK_FALSE(evaluate(Graph(0), parse_formula("exists x. true")));
  CHECK(evaluate(Graph(3), parse_formula("exists=0 x. exists y. E(x,y)")));
}

TEST_CASE("evaluation errors") {
  const Formula deg = parse_formula("exists>=2 y. E(x,y)");
  CHECK_THROWS_AS(evaluate(path_graph(3), deg), PreconditionError);
  CHECK_THROWS_AS(evaluate(path_graph(3), deg, {{"x", 3}}), PreconditionError);
  CHECK_THROWS_AS(evaluate(path_graph(3), deg, {{"x", -1}}), PreconditionError);
  Evaluator ev(path_graph(3), parse_formula("x=x").shared_store());
  CHECK_THROWS_AS(ev.evaluate(deg, {{"x", 0}}), PreconditionError);
  try {
    evaluate(path_graph(3), deg);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("x") != std::string::npos);
  }
}

TEST_CASE("evaluator matches direct semantics on random formulas") {
  FormulaBuilder b;
  RandomFormulas gen(b, 11);
  const std::vector<Graph> graphs = {Graph(0), Graph(1), path_graph(4), cycle_graph(5), complete_graph(4),
                                     two_triangles(), generate("petersen")};
  std::vector<NodeId> roots;
  for (int i = 0; i < 300; ++i) roots.push_back(gen.next(5));
  for (const Graph& g : graphs) {
    Evaluator ev(g, b.shared_store());
    const int n = g.order();
    for (NodeId root : roots) {
      const Formula f = b.formula(root);
      for (int trial = 0; trial < 4 && trial < std::max(n, 1); ++trial) {
        std::vector<Vertex> env = {trial % std::max(n, 1), (trial * 3 + 1) % std::max(n, 1),
                                   (trial * 7 + 2) % std::max(n, 1)};
        if (n == 0 && f.node().free_vars != 0) continue;
        const Assignment a = {{"x", env[0]}, {"y", env[1]}, {"z", env[2]}};
        Assignment bound;
        for (const auto& name : f.free_variables()) bound[name] = a.at(name);
        const bool expected = naive_eval(b.store(), root, g, env);
        CHECK(ev.evaluate(f, bound) == expected);
        CHECK(evaluate(g, f, bound) == expected);
      }
    }
  }
}

TEST_CASE("exact counting agrees with its at-least expansion") {
  FormulaBuilder b;
  RandomFormulas gen(b, 5);
  const std::vector<Graph> graphs = {path_graph(4), cycle_graph(5), complete_graph(4), generate("cube")};
  for (int i = 0; i < 150; ++i) {
    const NodeId body = gen.next(3);
    const VarId v = gen.var();
    const std::uint32_t r = gen.count();
    const NodeId exact = b.count_exact(r, v, body);
    const NodeId expanded =
        b.conjunction({b.count_at_least(r, v, body), b.negate(b.count_at_least(r + 1, v, body))});
    const Formula fe = b.formula(exact), fx = b.formula(expanded);
    CHECK(fe.node().free_vars == fx.node().free_vars);
    for (const Graph& g : graphs) {
      Evaluator ev(g, b.shared_store());
      for (Vertex u = 0; u < g.order(); u += 2) {
        Assignment env;
        for (const auto& name : fe.free_variables()) env[name] = (u + static_cast<int>(name[0])) % g.order();
        CHECK(ev.evaluate(fe, env) == ev.evaluate(fx, env));
      }
    }
  }
}

TEST_CASE("hash-consing shares structurally equal subformulas") {
  FormulaBuilder b;
  const VarId x = b.variable("x"), y = b.variable("y");
  CHECK(b.variable("x") == x);
  CHECK(b.edge(x, y) == b.edge(x, y));
  CHECK(b.edge(x, y) != b.edge(y, x));
  const NodeId e = b.edge(x, y);
  CHECK(b.conjunction({e, b.negate(e)}) == b.conjunction({e, b.negate(e)}));
  CHECK(b.conjunction({e, b.bottom()}) == b.bottom());
  CHECK(b.disjunction({e, b.bottom()}) == e);
  CHECK(b.disjunction({}) == b.bottom());
  CHECK(b.exists(x, b.bottom()) == b.bottom());
  CHECK(b.count_exact(2, x, b.bottom()) == b.bottom());
  CHECK(b.count_exact(0, x, b.bottom()) != b.bottom());
  CHECK(b.formula(b.exists(x, e)).free_variables() == std::vector<std::string>{"y"});
}

TEST_CASE("node budget guard") {
  FormulaBuilder small(8);
  const VarId x = small.variable("x"), y = small.variable("y");
  NodeId f = small.edge(x, y);
  CHECK_THROWS_AS(
      {
        for (int i = 0; i < 10; ++i) f = small.negate(f);
      },
      ResourceLimitError);
  try {
    build_walk_formula(3, 40, 2000);
    FAIL("budget not enforced");
  } catch (const ResourceLimitError& e) {
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_formula("E(x,y) & E(y,x) & x=y", 2), ResourceLimitError);
}

TEST_CASE("integer partitions") {
  CHECK(integer_partitions(0) == PartitionSet{Partition{}});
  CHECK(integer_partitions(1) == PartitionSet{{{1, 1}}});
  const PartitionSet four = integer_partitions(4);
  const PartitionSet expected = {{{4, 1}}, {{3, 1}, {1, 1}}, {{2, 2}}, {{2, 1}, {1, 2}}, {{1, 4}}};
  CHECK(four == expected);
  const std::vector<long long> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
  for (int r = 0; r < static_cast<int>(counts.size()); ++r) {
    const PartitionSet ps = integer_partitions(r);
    CHECK(static_cast<long long>(ps.size()) == counts[static_cast<std::size_t>(r)]);
    CHECK(partition_count(r) == counts[static_cast<std::size_t>(r)]);
    std::set<Partition, bool (*)(const Partition&, const Partition&)> seen(
        [](const Partition& a, const Partition& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                              [](const PartitionPart& p, const PartitionPart& q) {
                                                return std::pair(p.part, p.multiplicity) <
                                                       std::pair(q.part, q.multiplicity);
                                              });
        });
    for (const Partition& p : ps) {
      int sum = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(p[i].part > 0);
        CHECK(p[i].multiplicity >= 1);
        if (i) CHECK(p[i].part < p[i - 1].part);
        sum += p[i].part * p[i].multiplicity;
      }
      CHECK(sum == r);
      CHECK(seen.insert(p).second);
    }
    std::size_t streamed = 0;
    for_each_partition(r, [&](const Partition& p) { CHECK(p == ps[streamed++]); });
    CHECK(streamed == ps.size());
  }
  CHECK(partition_count(60) == 966467);
  CHECK_THROWS_AS(integer_partitions(-1), PreconditionError);
}

TEST_CASE("walk formula examples") {
  CountingFormulaFactory f;
  const VarId x = f.x(), y = f.y();
  CHECK(f.walk(1, 1, x, y) == f.builder().edge(x, y));
  CHECK(f.walk(1, 0, x, y) == f.builder().negate(f.builder().edge(x, y)));
  CHECK(f.walk(1, 2, x, y) == f.builder().bottom());
  const Formula psi22 = f.formula(f.walk(2, 2, x, y));
  for (Vertex u = 0; u < 3; ++u) CHECK(evaluate(complete_graph(3), psi22, {{"x", u}, {"y", u}}));
  const Formula psi20 = f.formula(f.walk(2, 0, x, y));
  CHECK(evaluate(cycle_graph(6), psi20, {{"x", 0}, {"y", 3}}));
  CHECK_FALSE(evaluate(cycle_graph(6), psi20, {{"x", 0}, {"y", 2}}));
  CHECK(count_variables(build_walk_formula(2, 1)) == 3);
  CHECK(build_walk_formula(2, 1).free_variables() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("walk formula soundness (n <= 4, length <= 3)") {
  CountingFormulaFactory f;
  const auto graphs = corpus(1, 4);
  for (int l = 1; l <= 3; ++l) {
    for (int r = 0; r <= 7; ++r) {
      const Formula psi = f.formula(f.walk(l, r, f.x(), f.y()));
      CHECK(count_variables(psi) <= 3);
      for (const Graph& g : graphs) {
        const auto power = oracle::power(g, l);
        Evaluator ev(g, f.shared_store());
        for (Vertex u = 0; u < g.order(); ++u)
          for (Vertex v = 0; v < g.order(); ++v)
            CHECK(ev.evaluate(psi, {{"x", u}, {"y", v}}) == (power[u][v] == r));
      }
    }
  }
}

TEST_CASE("closed walk sentence examples") {
  CHECK(evaluate(cycle_graph(6), build_closed_walk_sentence(3, 0)));
  const Formula phi312 = build_closed_walk_sentence(3, 12);
  CHECK(phi312.is_sentence());
  CHECK(evaluate(two_triangles(), phi312));
  CHECK_FALSE(evaluate(cycle_graph(6), phi312));
  CHECK(evaluate(complete_graph(3), build_closed_walk_sentence(2, 6)));
  CHECK(count_variables(build_closed_walk_sentence(2, 6)) == 3);
}

TEST_CASE("closed walk sentence soundness (n <= 4, length <= 3)") {
  CountingFormulaFactory f;
  const auto graphs = corpus(1, 4);
  for (int l = 1; l <= 3; ++l) {
    for (int r = 0; r <= 24; r += (l == 3 ? 6 : 2)) {
      const Formula phi = f.formula(f.closed_walks(l, r));
      CHECK(count_variables(phi) <= 3);
      for (const Graph& g : graphs) CHECK(evaluate(g, phi) == (oracle::trace_power(g, l) == r));
    }
  }
}

TEST_CASE("distance formulas") {
  const Graph cube = generate("cube");
  const auto dist = oracle::bfs_distances(cube);
  Vertex antipode = 0;
  for (Vertex v = 0; v < 8; ++v)
    if (dist[0][v] == 3) antipode = v;
  CHECK(evaluate(cube, build_distance_formula(3), {{"x", 0}, {"y", antipode}}));
  const Formula d0 = build_distance_formula(0);
  for (Vertex u = 0; u < 5; ++u) CHECK(evaluate(cycle_graph(5), d0, {{"x", u}, {"y", u}}));
  CHECK(evaluate(cycle_graph(6), build_distance_formula(1), {{"x", 0}, {"y", 1}}));
  CHECK_FALSE(evaluate(cycle_graph(6), build_distance_formula(2), {{"x", 0}, {"y", 1}}));
  CHECK(count_variables(build_distance_formula(5)) == 3);

  CountingFormulaFactory f;
  for (const Graph& g : corpus(1, 6)) {
    const auto d = oracle::bfs_distances(g);
    Evaluator ev(g, f.shared_store());
    for (int i = 0; i <= 5; ++i) {
      const Formula delta = f.formula(f.distance(i, f.x(), f.y()));
      for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < g.order(); ++v) CHECK(ev.evaluate(delta, {{"x", u}, {"y", v}}) == (d[u][v] == i));
    }
  }
}

TEST_CASE("DRG sentence examples") {
  const Graph cube = generate("cube");
  const Graph petersen = generate("petersen");
  CHECK(evaluate(cube, build_drg_sentence(parse_intersection_array("{3,2,1;1,2,3}"))));
  CHECK(evaluate(petersen, build_drg_sentence(parse_intersection_array("{3,2;1,1}"))));
  CHECK_FALSE(evaluate(petersen, build_drg_sentence(parse_intersection_array("{3,2,1;1,2,3}"))));
  CHECK_FALSE(evaluate(cube, build_drg_sentence(parse_intersection_array("{3,2;1,1}"))));
  CHECK(evaluate(Graph(1), build_drg_sentence(parse_intersection_array("{;}"))));
  CHECK_FALSE(evaluate(Graph(2), build_drg_sentence(parse_intersection_array("{;}"))));
  CHECK(count_variables(build_drg_sentence(parse_intersection_array("{3,2,1;1,2,3}"))) == 3);
  CHECK(build_drg_sentence(parse_intersection_array("{3,2;1,1}")).is_sentence());
}

TEST_CASE("DRG sentence soundness on connected graphs (n <= 6)") {
  CountingFormulaFactory f;
  std::set<IntersectionArray> arrays = {parse_intersection_array("{3,2,1;1,2,3}"),
                                        parse_intersection_array("{2,1;1,1}"),
                                        parse_intersection_array("{2,1;1,2}")};
  std::vector<Graph> connected;
  for (const Graph& g : corpus(1, 6)) {
    if (!g.is_connected()) continue;
    connected.push_back(g);
    if (auto a = drg_intersection_array(g).array) arrays.insert(*a);
  }
  std::vector<std::pair<IntersectionArray, NodeId>> sentences;
  for (const auto& a : arrays) sentences.emplace_back(a, f.drg_sentence(a));
  int positives = 0;
  for (const Graph& g : connected) {
    const auto actual = drg_intersection_array(g).array;
    Evaluator ev(g, f.shared_store());
    for (const auto& [a, root] : sentences) {
      const bool holds = ev.evaluate(f.formula(root));
      CHECK(holds == (actual == a));
      positives += holds;
    }
  }
  CHECK(positives > 10);
}
