#include "doctest.h"
#include "oracles.hpp"

#include "gspec/enumerate.hpp"
#include "gspec/errors.hpp"
#include "gspec/generators.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"
#include "gspec/isomorphism.hpp"

#include <random>
#include <set>

using namespace gspec;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  return Graph::from_predicate(n, [&](Vertex, Vertex) { return coin(rng); });
}

Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<Vertex> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(m);
}

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("graph6 decoding of small records") {
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("B?") == Graph(3));
  CHECK(parse_graph6("Bg") == path_graph(3));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("?") == Graph(0));
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete_graph(3));
  CHECK(parse_graph6("Bw\r\n") == complete_graph(3));
}

TEST_CASE("graph6 encoding") {
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(write_graph6(Graph(3)) == "B?");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(path_graph(3)) == "Bg");
}

TEST_CASE("graph6 round trip over the n <= 6 corpus") {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 size prefixes") {
  std::mt19937_64 rng(7);
  for (int n : {62, 63, 64, 100, 300}) {
    const Graph g = random_graph(n, 0.3, rng);
    const std::string text = write_graph6(g);
    if (n <= 62) {
      CHECK(static_cast<int>(text[0]) == n + 63);
    } else {
      CHECK(text[0] == '~');
      CHECK(text[1] != '~');
    }
    CHECK(parse_graph6(text) == g);
  }
  // The six-sextet size form is accepted even when a shorter form exists.
  std::string long_form = "~~";
  long_form += static_cast<char>(63);
  long_form += static_cast<char>(63);
  long_form += static_cast<char>(63);
  long_form += static_cast<char>(63);
  long_form += static_cast<char>(63 + 0);
  long_form += static_cast<char>(63 + 63);
  long_form += std::string((63 * 62 / 2 + 5) / 6, '?');
  CHECK(parse_graph6(long_form) == Graph(63));
}

TEST_CASE("graph6 errors carry 1-based offsets") {
  CHECK(parse_error_offset("Bww") == 3);       // trailing byte
  CHECK(parse_error_offset("Bx") == 2);        // nonzero padding bits
  CHECK(parse_error_offset("B") == 2);         // truncated
  CHECK(parse_error_offset("B w") == 2);       // byte below 63
  CHECK(parse_error_offset("") == 1);
  CHECK(parse_error_offset(">>graph6<<Bx") == 12);
  CHECK_THROWS_AS(parse_graph6("\x7f"), ParseError);
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(-1), PreconditionError);
  const Graph g(4, {{0, 1}, {1, 0}, {2, 3}});
  CHECK(g.edge_count() == 2);
  for (Vertex u = 0; u < 4; ++u) {
    CHECK_FALSE(g.has_edge(u, u));
    for (Vertex v = 0; v < 4; ++v) CHECK(g.has_edge(u, v) == g.has_edge(v, u));
  }
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Permutation({0, 2}), PreconditionError);
  const Permutation p({2, 0, 1});
  CHECK(p.compose(p.inverse()).is_identity());
  CHECK(p.compose(p)(0) == p(p(0)));
  const Graph g = path_graph(3);
  const Graph h = p.apply(g);
  for (const auto& [u, v] : g.edges()) CHECK(h.has_edge(p(u), p(v)));
  CHECK(h.edge_count() == g.edge_count());
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(3)) == Graph(3));
  CHECK(complement(Graph(1)) == Graph(1));
  CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)).has_value());
  CHECK(oracle::brute_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = random_graph(9, 0.4, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).edge_count() + g.edge_count() == 36);
  }
}

TEST_CASE("disjoint union") {
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK_FALSE(two_triangles.has_edge(0, 3));
  CHECK(disjoint_union(Graph(1), Graph(1)) == Graph(2));
  const Graph u = disjoint_union(cycle_graph(6), Graph(1));
  CHECK(u.order() == 7);
  CHECK(u.has_isolated_vertex());
  CHECK(u.degree(6) == 0);
  CHECK(u.edge_count() == 6);
}

TEST_CASE("named generators") {
  const Graph p13 = paley_graph(13);
  CHECK(p13.order() == 13);
  CHECK(p13.regular_degree() == 6);
  CHECK(p13.neighbors(0) == std::vector<Vertex>{1, 3, 4, 9, 10, 12});
  const Graph c13 = cubic_paley_graph(13);
  CHECK(c13.regular_degree() == 4);
  CHECK(c13.neighbors(0) == std::vector<Vertex>{1, 5, 8, 12});

  const Graph cube = generate("cube");
  CHECK(cube.order() == 8);
  CHECK(cube.regular_degree() == 3);
  const auto dist = oracle::bfs_distances(cube);
  int diameter = 0;
  for (const auto& row : dist)
    for (int d : row) diameter = std::max(diameter, d);
  CHECK(diameter == 3);
  // Bipartite: every edge joins the two BFS parity classes from vertex 0.
  for (const auto& [u, v] : cube.edges()) CHECK((dist[0][u] + dist[0][v]) % 2 == 1);

  CHECK(generate("tetrahedron") == complete_graph(4));
  CHECK(generate("octahedron").regular_degree() == 4);
  CHECK(generate("octahedron").order() == 6);
  CHECK(generate("icosahedron").regular_degree() == 5);
  CHECK(generate("icosahedron").order() == 12);
  CHECK(generate("dodecahedron").regular_degree() == 3);
  CHECK(generate("dodecahedron").order() == 20);
  CHECK(generate("petersen").regular_degree() == 3);
  CHECK(generate("petersen").order() == 10);
  CHECK(generate("rook:4").regular_degree() == 6);
  CHECK(generate("rook:4,4") == generate("rook:4"));
  CHECK(generate("shrikhande").regular_degree() == 6);
  CHECK(generate("hypercube:3") == generate("cube"));
  CHECK(generate("complete_multipartite:2,2,2").regular_degree() == 4);
  CHECK(generate("cycle:6") == cycle_graph(6));
  CHECK(generate("path:1") == Graph(1));
}

TEST_CASE("generator parameter errors name the condition") {
  auto message = [](const std::string& spec) {
    try {
      generate(spec);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("paley:12").find("prime") != std::string::npos);
  CHECK(message("paley:7").find("mod 4") != std::string::npos);
  CHECK(message("cubic_paley:11").find("mod 3") != std::string::npos);
  CHECK_FALSE(message("cycle:2").empty());
  CHECK_FALSE(message("nosuchfamily").empty());
  CHECK_FALSE(message("rook:3,4").empty());
}

TEST_CASE("enumeration counts match Burnside and labeled dedup") {
  for (int n = 0; n <= 7; ++n) {
    CHECK(static_cast<long long>(enumerate_nonisomorphic(n).size()) == oracle::polya_graph_count(n));
  }
  const std::vector<std::size_t> expected = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_nonisomorphic(n).size() == expected[static_cast<std::size_t>(n)]);
  // Labeled enumeration plus brute-force canonical forms.
  for (int n = 0; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::vector<bool>> classes;
    for (long mask = 0; mask < (1L << pairs); ++mask) {
      int bit = 0;
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) edges.emplace_back(u, v);
      classes.insert(oracle::brute_canonical(Graph(n, edges)));
    }
    std::set<std::vector<bool>> enumerated;
    for (const Graph& g : enumerate_nonisomorphic(n)) enumerated.insert(oracle::brute_canonical(g));
    CHECK(enumerated.size() == enumerate_nonisomorphic(n).size());
    CHECK(enumerated == classes);
  }
  CHECK_THROWS_AS(enumerate_nonisomorphic(8), PreconditionError);
  CHECK_THROWS_AS(enumerate_nonisomorphic(-1), PreconditionError);
}

TEST_CASE("isomorphism examples") {
  const auto id = are_isomorphic(complete_graph(3), cycle_graph(3));
  REQUIRE(id.has_value());
  CHECK(id->is_identity());
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK_FALSE(are_isomorphic(two_triangles, cycle_graph(6)).has_value());
  CHECK_FALSE(are_isomorphic(path_graph(3), complete_graph(3)).has_value());
  CHECK_FALSE(are_isomorphic(generate("shrikhande"), generate("rook:4")).has_value());
}

TEST_CASE("isomorphism witnesses under random relabeling") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      const Permutation p = random_perm(n, rng);
      const Graph h = p.apply(g);
      const auto w = are_isomorphic(g, h);
      REQUIRE(w.has_value());
      CHECK(w->apply(g) == h);
      const auto back = are_isomorphic(h, g);
      REQUIRE(back.has_value());
      CHECK(back->apply(h) == g);
      CHECK(w->inverse().apply(h) == g);
      CHECK(are_isomorphic(g, g).has_value());
    }
  }
  for (int i = 0; i < 10; ++i) {
    const Graph g = random_graph(30, 0.5, rng);
    const Graph h = random_perm(30, rng).apply(g);
    const auto w = are_isomorphic(g, h);
    REQUIRE(w.has_value());
    CHECK(w->apply(g) == h);
  }
}

TEST_CASE("isomorphism agrees with brute force on n <= 5") {
  std::vector<Graph> all;
  for (int n = 4; n <= 5; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n)) all.push_back(g);
  std::mt19937_64 rng(5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      const Graph h = random_perm(all[j].order(), rng).apply(all[j]);
      CHECK(are_isomorphic(all[i], h).has_value() == oracle::brute_isomorphic(all[i], h));
    }
  }
}

TEST_CASE("nontrivial automorphisms") {
  CHECK(nontrivial_automorphism(cycle_graph(5)).has_value());
  CHECK_FALSE(nontrivial_automorphism(Graph(1)).has_value());
  // The smallest asymmetric graphs have 6 vertices; there are 8 of them.
  int asymmetric = 0;
  for (const Graph& g : enumerate_nonisomorphic(6)) {
    const auto a = nontrivial_automorphism(g);
    if (a) {
      CHECK_FALSE(a->is_identity());
      CHECK(a->apply(g) == g);
    } else {
      ++asymmetric;
    }
  }
  CHECK(asymmetric == 8);
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_nonisomorphic(n)) CHECK(nontrivial_automorphism(g).has_value());
}
