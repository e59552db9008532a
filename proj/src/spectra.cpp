#include "gspec/spectra.hpp"

#include "gspec/linalg.hpp"

#include <algorithm>

namespace gspec {

IntPoly characteristic_polynomial(const Graph& g) { return char_poly(g.adjacency()); }

GeneralizedSpectrum generalized_spectrum(const Graph& g) {
  return {characteristic_polynomial(g), characteristic_polynomial(complement(g))};
}

bool cospectral(const Graph& g, const Graph& h) {
  return g.order() == h.order() && characteristic_polynomial(g) == characteristic_polynomial(h);
}

bool generalized_cospectral(const Graph& g, const Graph& h) {
  return cospectral(g, h) && cospectral(complement(g), complement(h));
}

IntPoly gen_char_poly_at(const Graph& g, const Integer& y) {
  IntMatrix m = g.adjacency();
  m.array() += y;
  return char_poly(m);
}

std::vector<Integer> closed_walk_sequence(const Graph& g, unsigned count) {
  std::vector<Integer> out;
  const IntMatrix a = g.adjacency();
  IntMatrix power = identity<Integer>(g.order());
  for (unsigned l = 0; l < count; ++l) {
    out.push_back(power.trace());
    if (l + 1 < count) power = (power * a).eval();
  }
  return out;
}

std::vector<Integer> total_walk_sequence(const Graph& g, unsigned count) {
  std::vector<Integer> out;
  const IntMatrix a = g.adjacency();
  IntVector v = IntVector::Constant(g.order(), Integer(1));
  for (unsigned l = 0; l < count; ++l) {
    out.push_back(v.sum());
    if (l + 1 < count) v = (a * v).eval();
  }
  return out;
}

Integer closed_walks(const Graph& g, unsigned length) { return mat_pow(g.adjacency(), length).trace(); }

Integer total_walks(const Graph& g, unsigned length) { return total_walk_sequence(g, length + 1).back(); }

bool walk_equivalent(const Graph& g, const Graph& h) {
  const auto terms = static_cast<unsigned>(2 * std::max(g.order(), h.order()));
  return total_walk_sequence(g, terms) == total_walk_sequence(h, terms);
}

WalkMatrix walk_matrix(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw PreconditionError("walk matrix needs at least one vertex");
  const IntMatrix a = g.adjacency();
  WalkMatrix w{IntMatrix(n, n)};
  w.columns.col(0) = IntVector::Constant(n, Integer(1));
  for (int l = 1; l < n; ++l) w.columns.col(l) = a * w.columns.col(l - 1);
  return w;
}

IntMatrix walk_gram(const Graph& g) {
  const auto w = walk_matrix(g);
  return w.columns.transpose() * w.columns;
}

bool is_controllable(const Graph& g) { return bareiss_determinant(walk_matrix(g).columns) != 0; }

ControllableIsoResult controllable_iso(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw PreconditionError("controllable_iso needs graphs of equal order");
  const auto wg = walk_matrix(g);
  const auto wh = walk_matrix(h);
  const auto wh_inv = inverse(to_rational(wh.columns));
  if (bareiss_determinant(wg.columns) == 0) throw NotControllableError("first graph is not controllable");
  if (!wh_inv) throw NotControllableError("second graph is not controllable");

  ControllableIsoResult result;
  result.q = to_rational(wg.columns) * *wh_inv;
  const int n = g.order();
  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<int> column_hits(static_cast<std::size_t>(n), 0);
  bool permutation_matrix = true;
  for (Index r = 0; r < n && permutation_matrix; ++r) {
    for (Index c = 0; c < n; ++c) {
      const Rational& e = result.q(r, c);
      if (e == 0) continue;
      if (e != 1 || map[static_cast<std::size_t>(r)] != -1) {
        permutation_matrix = false;
        break;
      }
      map[static_cast<std::size_t>(r)] = static_cast<Vertex>(c);
      ++column_hits[static_cast<std::size_t>(c)];
    }
    if (map[static_cast<std::size_t>(r)] == -1) permutation_matrix = false;
  }
  permutation_matrix = permutation_matrix &&
                       std::all_of(column_hits.begin(), column_hits.end(), [](int k) { return k == 1; });
  result.q_is_permutation_matrix = permutation_matrix;
  if (!permutation_matrix) return result;

  // Row u of Q has its 1 in column map[u]; Qᵀ A_g Q = A_h says exactly that
  // the relabeling u -> map[u] carries g onto h.
  const RatMatrix transported = result.q.transpose() * g.adjacency<Rational>() * result.q;
  if (transported != h.adjacency<Rational>()) return result;
  Permutation p(std::move(map));
  if (p.apply(g) != h) return result;
  result.permutation = std::move(p);
  return result;
}

}  // namespace gspec
