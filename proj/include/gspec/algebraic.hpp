#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/intersection_array.hpp"
#include "gspec/types.hpp"

#include <optional>
#include <vector>

namespace gspec {

/// Raised for inputs that must be connected. `first` and `second` lie in
/// different components.
class DisconnectedGraphError : public PreconditionError {
 public:
  DisconnectedGraphError(Vertex first, Vertex second);
  Vertex first() const { return first_; }
  Vertex second() const { return second_; }

 private:
  Vertex first_, second_;
};

/// BFS distances, -1 between different components.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

/// A_0 = I, ..., A_d with (A_i)_{uv} = 1 iff dist(u, v) = i.
struct DistanceMatrices {
  std::vector<IntMatrix> matrices;
  int diameter() const { return static_cast<int>(matrices.size()) - 1; }
  /// A_i, or the zero matrix for i > d.
  IntMatrix at(int i) const;
};

DistanceMatrices distance_matrices(const Graph& g);

/// Two pairs at distance i whose counts differ: `which` is 'b' (neighbors
/// of v at distance i+1 from u) or 'c' (at distance i-1). Irregularity
/// shows up as a 'b' violation at i = 0 on pairs (u, u), (u', u').
struct DrgViolation {
  char which = 'b';
  int i = 0;
  Vertex u = 0, v = 0;
  Vertex u2 = 0, v2 = 0;
  int count = 0, count2 = 0;
};

struct DrgResult {
  std::optional<IntersectionArray> array;
  std::optional<DrgViolation> violation;
};

/// Throws DisconnectedGraphError for disconnected input and
/// PreconditionError for the empty graph.
DrgResult drg_intersection_array(const Graph& g);

struct SrgParameters {
  int n = 0, k = 0, a = 0, c = 0;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// A regular graph where adjacent pairs have a common neighbors and
/// distinct non-adjacent pairs have c. When no adjacent (or no non-adjacent
/// distinct) pair exists, the corresponding parameter is reported as 0.
std::optional<SrgParameters> srg_parameters(const Graph& g);

struct WalkClass {
  std::vector<Integer> walk_vector;  // ((A^0)_{uv}, ..., (A^d)_{uv})
  IntMatrix indicator;
  std::size_t size = 0;
};

/// Classes of V×V by walk vector, in increasing lexicographic order of the
/// vectors. d = deg(min poly of A) - 1.
struct PairPartition {
  int d = 0;
  std::vector<WalkClass> classes;
};

PairPartition walk_regular_partition(const Graph& g);

struct QuotientPolynomialVerdict {
  bool holds = false;
  std::size_t classes = 0;     // m
  std::size_t d_plus_one = 0;  // dimension of the adjacency algebra
};

/// Throws std::logic_error if m < d+1, which would contradict the
/// containment of the adjacency algebra in the span of the classes.
QuotientPolynomialVerdict is_quotient_polynomial(const Graph& g);

}  // namespace gspec
