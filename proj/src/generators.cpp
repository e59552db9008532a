#include "gspec/generators.hpp"

#include "gspec/errors.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <set>

namespace gspec {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

std::set<int> power_residues(int q, int exponent) {
  std::set<int> out;
  for (long x = 1; x < q; ++x) {
    long r = 1;
    for (int e = 0; e < exponent; ++e) r = (r * x) % q;
    out.insert(static_cast<int>(r));
  }
  return out;
}

Graph circulant(int q, const std::set<int>& connection) {
  return Graph::from_predicate(q, [&](Vertex u, Vertex v) { return connection.count(((v - u) % q + q) % q) > 0; });
}

void expect_params(const GeneratorSpec& spec, std::size_t count) {
  require(spec.params.size() == count, "generator '" + spec.name + "' takes " + std::to_string(count) +
                                           " parameter(s), got " + std::to_string(spec.params.size()));
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  return Graph::from_predicate(n, [n](Vertex u, Vertex v) { return v - u == 1 || (u == 0 && v == n - 1); });
}

Graph path_graph(int n) {
  require(n >= 1, "path(n) needs n >= 1");
  return Graph::from_predicate(n, [](Vertex u, Vertex v) { return v - u == 1; });
}

Graph complete_graph(int n) {
  require(n >= 0, "complete(n) needs n >= 0");
  return Graph::from_predicate(n, [](Vertex, Vertex) { return true; });
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  require(!parts.empty(), "complete_multipartite needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "complete_multipartite part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  return Graph::from_predicate(static_cast<int>(part_of.size()), [&](Vertex u, Vertex v) {
    return part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)];
  });
}

Graph hypercube_graph(int d) {
  require(d >= 0 && d <= 16, "hypercube(d) needs 0 <= d <= 16");
  return Graph::from_predicate(1 << d, [](Vertex u, Vertex v) {
    const unsigned x = static_cast<unsigned>(u ^ v);
    return (x & (x - 1)) == 0;
  });
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph tetrahedron_graph() { return complete_graph(4); }
Graph cube_graph() { return hypercube_graph(3); }
Graph octahedron_graph() { return complete_multipartite_graph({2, 2, 2}); }

Graph icosahedron_graph() {
  // Apex 0, upper ring 1..5, lower ring 6..10, antipode 11.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i;
    const int up_next = 1 + (i + 1) % 5;
    const int low = 6 + i;
    const int low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up_next, low);
    edges.emplace_back(low, low_next);
    edges.emplace_back(low, 11);
  }
  return Graph(12, edges);
}

Graph dodecahedron_graph() {
  // Generalized Petersen graph GP(10, 2).
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i) {
    edges.emplace_back(i, (i + 1) % 10);
    edges.emplace_back(i, 10 + i);
    edges.emplace_back(10 + i, 10 + (i + 2) % 10);
  }
  return Graph(20, edges);
}

Graph rook_graph(int m) {
  require(m >= 1, "rook(m,m) needs m >= 1");
  return Graph::from_predicate(m * m, [m](Vertex u, Vertex v) {
    const bool same_row = u / m == v / m;
    const bool same_col = u % m == v % m;
    return same_row != same_col;
  });
}

Graph shrikhande_graph() {
  // Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
  return Graph::from_predicate(16, [](Vertex u, Vertex v) {
    const int di = ((v / 4 - u / 4) % 4 + 4) % 4;
    const int dj = ((v % 4 - u % 4) % 4 + 4) % 4;
    return (di == 0 && (dj == 1 || dj == 3)) || (dj == 0 && (di == 1 || di == 3)) || (di == dj && (di == 1 || di == 3));
  });
}

Graph paley_graph(int q) {
  require(is_prime(q), "paley(q) needs q prime, got " + std::to_string(q));
  require(q % 4 == 1, "paley(q) needs q ≡ 1 (mod 4), got q ≡ " + std::to_string(q % 4) + " (mod 4)");
  return circulant(q, power_residues(q, 2));
}

Graph cubic_paley_graph(int q) {
  require(is_prime(q), "cubic_paley(q) needs q prime, got " + std::to_string(q));
  require(q % 3 == 1, "cubic_paley(q) needs q ≡ 1 (mod 3), got q ≡ " + std::to_string(q % 3) + " (mod 3)");
  require(((q - 1) / 3) % 2 == 0, "cubic_paley(q) needs (q-1)/3 even so that -1 is a cube");
  return circulant(q, power_residues(q, 3));
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw ParseError("empty generator name", 1);
  if (colon == std::string_view::npos) return spec;
  std::size_t pos = colon + 1;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || end != piece.data() + piece.size()) {
      throw ParseError("expected an integer generator parameter", pos + 1);
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return spec;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {
      "cycle",      "path",        "complete",    "complete_multipartite", "hypercube",
      "petersen",   "tetrahedron", "cube",        "octahedron",            "icosahedron",
      "dodecahedron", "rook",      "shrikhande",  "paley",                 "cubic_paley"};
  return names;
}

Graph generate(const GeneratorSpec& spec) {
  const auto& n = spec.name;
  const auto& p = spec.params;
  if (n == "cycle") return expect_params(spec, 1), cycle_graph(p[0]);
  if (n == "path") return expect_params(spec, 1), path_graph(p[0]);
  if (n == "complete") return expect_params(spec, 1), complete_graph(p[0]);
  if (n == "complete_multipartite") return complete_multipartite_graph(p);
  if (n == "hypercube") return expect_params(spec, 1), hypercube_graph(p[0]);
  if (n == "rook") {
    require(p.size() == 1 || (p.size() == 2 && p[0] == p[1]), "rook takes m or m,m");
    return rook_graph(p[0]);
  }
  if (n == "paley") return expect_params(spec, 1), paley_graph(p[0]);
  if (n == "cubic_paley") return expect_params(spec, 1), cubic_paley_graph(p[0]);
  static const std::map<std::string, std::function<Graph()>> fixed = {
      {"petersen", petersen_graph},       {"tetrahedron", tetrahedron_graph},
      {"cube", cube_graph},               {"octahedron", octahedron_graph},
      {"icosahedron", icosahedron_graph}, {"dodecahedron", dodecahedron_graph},
      {"shrikhande", shrikhande_graph}};
  if (auto it = fixed.find(n); it != fixed.end()) {
    expect_params(spec, 0);
    return it->second();
  }
  throw PreconditionError("unknown generator '" + n + "'");
}

Graph generate(std::string_view spec_text) { return generate(parse_generator_spec(spec_text)); }

}  // namespace gspec
