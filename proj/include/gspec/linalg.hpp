#pragma once

#include "gspec/errors.hpp"
#include "gspec/polynomial.hpp"
#include "gspec/types.hpp"

#include <optional>
#include <vector>

namespace gspec {

template <typename Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> all_ones(Index n) {
  return Matrix<Scalar>::Constant(n, n, Scalar(1));
}

inline IntMatrix identity(Index n) { return identity<Integer>(n); }
inline IntMatrix all_ones(Index n) { return all_ones<Integer>(n); }

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

template <typename Scalar>
Matrix<Scalar> mat_mul(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a * b;
}

/// m^power by binary exponentiation; m^0 is the identity.
template <typename Scalar>
Matrix<Scalar> mat_pow(const Matrix<Scalar>& m, unsigned power) {
  require_square(m, "mat_pow");
  Matrix<Scalar> result = identity<Scalar>(m.rows());
  Matrix<Scalar> base = m;
  while (power > 0) {
    if (power & 1u) result = (result * base).eval();
    power >>= 1u;
    if (power > 0) base = (base * base).eval();
  }
  return result;
}

/// Column-major flattening of a matrix into a vector.
template <typename Scalar>
Vector<Scalar> vectorize(const Matrix<Scalar>& m) {
  return Eigen::Map<const Vector<Scalar>>(m.data(), m.size());
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(IntMatrix m);

/// Exact determinant. Rows are scaled to integers by the lcm of their
/// denominators, the integer determinant is taken by Bareiss elimination, and
/// the scaling is divided back out.
Rational det(const RatMatrix& m);
Integer det(const IntMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; empty when `m` is singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Coefficients c with sum_i c_i * basis[i] == target, if any exist.
std::optional<RatVector> express_in_span(const std::vector<RatVector>& basis,
                                         const RatVector& target);

/// det(xI - m) by the Faddeev-LeVerrier recurrence
///   M_1 = I,  c_{n-k} = -tr(m M_k) / k,  M_{k+1} = m M_k + c_{n-k} I.
/// Every division is exact for integer input. O(n^4) big-integer products.
IntPoly char_poly(const IntMatrix& m);

/// Least-degree monic polynomial annihilating `m`, found as the first power
/// m^k whose flattening lies in the span of I, m, ..., m^{k-1}.
IntPoly min_poly(const IntMatrix& m);

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }

/// Converts to integers; throws DimensionError if an entry is not integral.
IntMatrix to_integer(const RatMatrix& m);

}  // namespace gspec
