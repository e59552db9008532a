#pragma once

#include "gspec/errors.hpp"
#include "gspec/types.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace gspec {

/// Dense univariate polynomial with exact coefficients stored in ascending
/// degree. The zero polynomial is stored as the single coefficient 0, every
/// other polynomial has a nonzero leading coefficient.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() : coeffs_{Scalar(0)} {}
  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) {
    normalize();
  }
  Polynomial(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { normalize(); }

  static Polynomial constant(const Scalar& c) { return Polynomial({c}); }
  static Polynomial monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  /// The polynomial `x`.
  static Polynomial x() { return monomial(Scalar(1), 1); }

  /// Degree, with -1 for the zero polynomial.
  int degree() const { return is_zero() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  const Scalar& leading() const { return coeffs_.back(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  /// Coefficient of x^i; zero beyond the degree.
  Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
      if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    std::vector<Scalar> out = p.coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }

  Scalar evaluate(const Scalar& at) const {
    Scalar acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
    return acc;
  }

  /// p(q(x)) by Horner's rule.
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(coeffs_[i]);
    return acc;
  }

  /// p(M) for a square matrix M, evaluated exactly by Horner's rule.
  Matrix<Scalar> evaluate(const Matrix<Scalar>& m) const {
    if (m.rows() != m.cols()) throw DimensionError("polynomial evaluation needs a square matrix");
    const Index n = m.rows();
    Matrix<Scalar> acc = Matrix<Scalar>::Zero(n, n);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = (acc * m).eval();
      for (Index d = 0; d < n; ++d) acc(d, d) += coeffs_[i];
    }
    return acc;
  }

  /// Quotient and remainder by a divisor whose leading coefficient divides
  /// every intermediate leading term (always true for monic divisors and for
  /// field scalars). Throws if an inexact integer division would be needed.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DimensionError("polynomial division by zero");
    std::vector<Scalar> rem = coeffs_;
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd) + 1, Scalar(0));
    for (int k = degree(); k >= dd; --k) {
      const Scalar& top = rem[static_cast<std::size_t>(k)];
      if (top == 0) continue;
      Scalar q = top / divisor.leading();
      if (q * divisor.leading() != top) throw DimensionError("inexact polynomial division");
      quot[static_cast<std::size_t>(k - dd)] = q;
      for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Human-readable form, highest degree first: "x^6 - 6*x^4 + 9*x^2 - 4".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Scalar& c = coeffs_[i];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Scalar mag = negative ? Scalar(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const bool unit = (mag == 1);
      if (i == 0) {
        out += mag.str();
      } else {
        if (!unit) out += mag.str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void normalize() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

/// Reads a polynomial from its ascending integer coefficients.
IntPoly make_int_poly(std::initializer_list<long> ascending);

}  // namespace gspec
