#pragma once

// Function algebras closed under the integrals the operator needs.
//
// ExpPoly:      sum of c x^k e^{mu x} with complex c, mu (floating point)
// RationalPoly: polynomial with exact rational coefficients
//
// Both expose the same small interface (constant, antiderivative with value 0
// at 0, value at 1, product, difference, reflection x -> 1-x) so the
// descent-polytope integral below works for either.

#include <complex>
#include <vector>

#include "descent/words.hpp"

namespace descent::expfun {

using Complex = std::complex<double>;

struct ExpTerm {
  Complex coef;
  int degree = 0;
  Complex mu;
};

class ExpPoly {
 public:
  /// Exponents closer than this are merged; |mu| below it is taken as 0.
  static constexpr double kMergeTolerance = 1e-9;

  using Scalar = Complex;

  ExpPoly() = default;
  static ExpPoly constant(Complex c);
  static ExpPoly term(Complex coef, int degree, Complex mu);

  const std::vector<ExpTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Complex operator()(double x) const;
  Complex at_one() const { return (*this)(1.0); }

  /// g with g' = f and g(0) = 0.
  ExpPoly antiderivative() const;
  /// x -> f(1 - x).
  ExpPoly reflected() const;
  ExpPoly conj() const;
  /// Drops terms whose coefficient modulus is at most tol.
  ExpPoly pruned(double tol) const;
  double max_abs_coefficient() const;

  void add(Complex coef, int degree, Complex mu);

  ExpPoly& operator+=(const ExpPoly& rhs);
  ExpPoly& operator-=(const ExpPoly& rhs);
  ExpPoly& operator*=(Complex s);
  friend ExpPoly operator+(ExpPoly lhs, const ExpPoly& rhs) { return lhs += rhs; }
  friend ExpPoly operator-(ExpPoly lhs, const ExpPoly& rhs) { return lhs -= rhs; }
  friend ExpPoly operator*(ExpPoly lhs, Complex s) { return lhs *= s; }
  friend ExpPoly operator*(Complex s, ExpPoly rhs) { return rhs *= s; }
  friend ExpPoly operator*(const ExpPoly& lhs, const ExpPoly& rhs);

 private:
  void normalize();

  std::vector<ExpTerm> terms_;  // sorted by (Re mu, Im mu, degree)
};

class RationalPoly {
 public:
  using Scalar = Rational;

  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  Rational at_one() const;
  RationalPoly antiderivative() const;
  RationalPoly reflected() const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& s);
  friend RationalPoly operator+(RationalPoly lhs, const RationalPoly& rhs) { return lhs += rhs; }
  friend RationalPoly operator-(RationalPoly lhs, const RationalPoly& rhs) { return lhs -= rhs; }
  friend RationalPoly operator*(RationalPoly lhs, const Rational& s) { return lhs *= s; }
  friend RationalPoly operator*(const RationalPoly& lhs, const RationalPoly& rhs);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

  /// Value as an ExpPoly (all exponents zero).
  ExpPoly to_exppoly() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies x^k; no trailing zeros
};

/// Integral over the descent polytope P_u in [0,1]^m (|u| = m-1) of
/// f(x_1) * g(x_m), integrating x_m, x_{m-1}, ..., x_1 in turn.
template <class Fn>
typename Fn::Scalar polytope_integral(const ABWord& u, const Fn& f, const Fn& g) {
  Fn h = g;
  for (std::size_t i = u.size(); i-- > 0;) {
    Fn antider = h.antiderivative();
    if (u[i] == Letter::a) {
      h = Fn::constant(antider.at_one()) - antider;  // x_{i+1} in [x_i, 1]
    } else {
      h = std::move(antider);                         // x_{i+1} in [0, x_i]
    }
  }
  return (f * h).antiderivative().at_one();
}

}  // namespace descent::expfun
