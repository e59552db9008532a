#pragma once

#include "gspec/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gspec {

/// A named graph family plus its integer parameters, written in the CLI as
/// "name" or "name:p1,p2,...", e.g. "paley:13", "complete_multipartite:2,2,2".
struct GeneratorSpec {
  std::string name;
  std::vector<int> params;
};

GeneratorSpec parse_generator_spec(std::string_view text);

/// Builds the standard labeled member of a family. Out-of-range parameters
/// throw PreconditionError naming the violated condition.
Graph generate(const GeneratorSpec& spec);
Graph generate(std::string_view spec_text);

/// Names accepted by `generate`.
const std::vector<std::string>& generator_names();

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph hypercube_graph(int d);
Graph petersen_graph();
Graph tetrahedron_graph();
Graph cube_graph();
Graph octahedron_graph();
Graph icosahedron_graph();
Graph dodecahedron_graph();
/// Cartesian square of K_m: (i, j) ~ (i', j') iff exactly one coordinate agrees.
Graph rook_graph(int m);
Graph shrikhande_graph();
/// i ~ j iff i - j is a nonzero square mod q; q prime, q ≡ 1 (mod 4).
Graph paley_graph(int q);
/// i ~ j iff i - j is a nonzero cube mod q; q prime, q ≡ 1 (mod 3) and
/// (q - 1)/3 even. The last condition makes -1 a cube, so the relation is
/// symmetric.
Graph cubic_paley_graph(int q);

bool is_prime(int q);

}  // namespace gspec
