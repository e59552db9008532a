#pragma once

#include "gspec/errors.hpp"
#include "gspec/graph.hpp"
#include "gspec/polynomial.hpp"
#include "gspec/types.hpp"

#include <optional>
#include <vector>

namespace gspec {

/// The pair (φ(Γ, x), φ(Γ̄, x)). Two graphs have equal generalized
/// characteristic polynomial det(xI - yJ - A) for every y exactly when both
/// members agree (Johnson-Newman), so this pair stands in for Φ(Γ, x, y).
struct GeneralizedSpectrum {
  IntPoly phi;
  IntPoly phi_complement;

  friend bool operator==(const GeneralizedSpectrum& a, const GeneralizedSpectrum& b) {
    return a.phi == b.phi && a.phi_complement == b.phi_complement;
  }
  friend bool operator<(const GeneralizedSpectrum& a, const GeneralizedSpectrum& b) {
    if (a.phi != b.phi) return a.phi < b.phi;
    return a.phi_complement < b.phi_complement;
  }
};

IntPoly characteristic_polynomial(const Graph& g);
GeneralizedSpectrum generalized_spectrum(const Graph& g);

bool cospectral(const Graph& g, const Graph& h);
bool generalized_cospectral(const Graph& g, const Graph& h);

/// det(xI - yJ - A) as a polynomial in x, for one integer value of y.
IntPoly gen_char_poly_at(const Graph& g, const Integer& y);

/// tr(A^length).
Integer closed_walks(const Graph& g, unsigned length);
/// 1ᵀ A^length 1.
Integer total_walks(const Graph& g, unsigned length);

/// tr(A^l) for l = 0 .. count-1.
std::vector<Integer> closed_walk_sequence(const Graph& g, unsigned count);
/// 1ᵀ A^l 1 for l = 0 .. count-1.
std::vector<Integer> total_walk_sequence(const Graph& g, unsigned count);

/// Equal walk generating functions. Both sequences satisfy linear
/// recurrences of order <= n (Cayley-Hamilton), so they are rational
/// functions with denominators of degree <= n; two such functions that agree
/// on the first 2n coefficients are equal. The comparison therefore stops at
/// length 2·max(n_g, n_h) - 1.
bool walk_equivalent(const Graph& g, const Graph& h);

/// W = (1, A1, ..., A^{n-1}1): column l holds the number of walks of length
/// l starting at each vertex.
struct WalkMatrix {
  IntMatrix columns;

  Index order() const { return columns.rows(); }
};

WalkMatrix walk_matrix(const Graph& g);
/// WᵀW.
IntMatrix walk_gram(const Graph& g);
bool is_controllable(const Graph& g);

class NotControllableError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Result of the walk-matrix isomorphism construction. `q` is
/// W_g W_h^{-1}; `permutation` is set only when q is a permutation matrix
/// that was verified to carry A_g to A_h.
struct ControllableIsoResult {
  std::optional<Permutation> permutation;
  RatMatrix q;
  bool q_is_permutation_matrix = false;
};

/// Throws NotControllableError if either graph is not controllable and
/// PreconditionError if the orders differ.
ControllableIsoResult controllable_iso(const Graph& g, const Graph& h);

}  // namespace gspec
