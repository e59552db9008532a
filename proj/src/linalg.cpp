#include "gspec/linalg.hpp"

#include <utility>

namespace gspec {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return boost::multiprecision::lcm(a, b);
}

// Forward elimination over the rationals into row echelon form; returns the
// pivot column of each nonzero row.
std::vector<Index> echelon(RatMatrix& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Integer bareiss_determinant(IntMatrix m) {
  require_square(m, "det");
  const Index n = m.rows();
  if (n == 0) return Integer(1);
  Integer sign(1);
  Integer prev(1);
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index sel = k + 1;
      while (sel < n && m(sel, k) == 0) ++sel;
      if (sel == n) return Integer(0);
      m.row(k).swap(m.row(sel));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer det(const IntMatrix& m) { return bareiss_determinant(m); }

Rational det(const RatMatrix& m) {
  require_square(m, "det");
  const Index n = m.rows();
  IntMatrix lifted(n, n);
  Integer scale(1);
  for (Index r = 0; r < n; ++r) {
    Integer row_lcm(1);
    for (Index c = 0; c < n; ++c) row_lcm = lcm(row_lcm, denominator(m(r, c)));
    for (Index c = 0; c < n; ++c) {
      lifted(r, c) = numerator(m(r, c)) * (row_lcm / denominator(m(r, c)));
    }
    scale *= row_lcm;
  }
  return Rational(bareiss_determinant(std::move(lifted))) / Rational(scale);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  require_square(m, "inverse");
  const Index n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = identity<Rational>(n);
  const auto pivots = echelon(aug);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  return RatMatrix(aug.rightCols(n));
}

std::size_t rank(RatMatrix m) { return echelon(m).size(); }

std::optional<RatVector> express_in_span(const std::vector<RatVector>& basis,
                                         const RatVector& target) {
  const Index len = target.size();
  const Index k = static_cast<Index>(basis.size());
  RatMatrix aug(len, k + 1);
  for (Index j = 0; j < k; ++j) {
    if (basis[static_cast<std::size_t>(j)].size() != len) {
      throw DimensionError("express_in_span: vector lengths differ");
    }
    aug.col(j) = basis[static_cast<std::size_t>(j)];
  }
  aug.col(k) = target;
  const auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  RatVector coeffs = RatVector::Zero(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    coeffs(pivots[r]) = aug(static_cast<Index>(r), k);
  }
  return coeffs;
}

IntPoly char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const Index n = m.rows();
  std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
  c[static_cast<std::size_t>(n)] = 1;
  IntMatrix acc = identity<Integer>(n);
  for (Index k = 1; k <= n; ++k) {
    IntMatrix am = m * acc;
    const Integer tr = am.trace();
    if (tr % k != 0) throw DimensionError("char_poly: inexact Faddeev-LeVerrier division");
    const Integer ck = -tr / k;
    c[static_cast<std::size_t>(n - k)] = ck;
    for (Index d = 0; d < n; ++d) am(d, d) += ck;
    acc = std::move(am);
  }
  return IntPoly(std::move(c));
}

IntPoly min_poly(const IntMatrix& m) {
  require_square(m, "min_poly");
  const Index n = m.rows();
  if (n == 0) return IntPoly::constant(Integer(1));
  std::vector<RatVector> powers;
  IntMatrix current = identity<Integer>(n);
  powers.push_back(vectorize<Integer>(current).cast<Rational>());
  for (Index k = 1; k <= n; ++k) {
    current = (current * m).eval();
    RatVector v = vectorize<Integer>(current).cast<Rational>();
    if (auto coeffs = express_in_span(powers, v)) {
      std::vector<Integer> poly(static_cast<std::size_t>(k) + 1, Integer(0));
      poly[static_cast<std::size_t>(k)] = 1;
      for (Index i = 0; i < k; ++i) {
        const Rational& q = (*coeffs)(i);
        if (denominator(q) != 1) throw DimensionError("min_poly: non-integral coefficient");
        poly[static_cast<std::size_t>(i)] = -numerator(q);
      }
      return IntPoly(std::move(poly));
    }
    powers.push_back(std::move(v));
  }
  throw DimensionError("min_poly: no annihilating polynomial of degree <= n (Cayley-Hamilton violated)");
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (denominator(m(r, c)) != 1) throw DimensionError("to_integer: non-integral entry");
      out(r, c) = numerator(m(r, c));
    }
  }
  return out;
}

}  // namespace gspec
