#pragma once

// Eigenfunctions of the restricted operator as piecewise exp-polynomials over
// the descent polytopes, their pairings, the asymptotic expansion of alpha_n,
// and direct application of the operator (floating and exact).

#include <stdexcept>
#include <vector>

#include "descent/exact.hpp"
#include "descent/exppoly.hpp"
#include "descent/spectral.hpp"

namespace descent::expfun {

using linalg::CMatrix;
using linalg::CVector;

/// Which coordinate of (x_1, ..., x_m) the pieces are functions of.
enum class Variable { first, last };

/// One function per descent polytope P_u, |u| = m-1, indexed by u.index().
template <class Fn>
struct Piecewise {
  int m = 0;
  Variable variable = Variable::first;
  std::vector<Fn> pieces;

  const Fn& operator[](const ABWord& u) const { return pieces.at(u.index()); }
  Fn& operator[](const ABWord& u) { return pieces.at(u.index()); }
};

using PiecewiseFn = Piecewise<ExpPoly>;
using PiecewisePoly = Piecewise<RationalPoly>;

/// Piecewise constants taken from wt1 (`initial`) or wt2 (`final`).
PiecewiseFn initial_weights(const WeightScheme& s);
PiecewiseFn final_weights(const WeightScheme& s);
PiecewisePoly initial_weights_exact(const WeightScheme& s);
PiecewisePoly final_weights_exact(const WeightScheme& s);

class JordanStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// phi with phi|P_u(x_1) = (e^{M x_1} c)_u, M = (A - B)/lambda, written out
/// through the generalized eigenvectors of M. Throws JordanStructureError if
/// the block structure cannot be resolved or the result does not reproduce
/// e^{Mx} c.
PiecewiseFn eigenfunction_pieces(const spectral::TransferPair& t, Complex lambda, const CVector& c);

/// (Jf) on P_u is f on P_{reversed(u)} composed with x -> 1 - x; toggles the
/// variable.
template <class Fn>
Piecewise<Fn> apply_J(const Piecewise<Fn>& f) {
  Piecewise<Fn> out{f.m, f.variable == Variable::first ? Variable::last : Variable::first, {}};
  const std::size_t len = f.m >= 1 ? static_cast<std::size_t>(f.m - 1) : 0;
  out.pieces.reserve(f.pieces.size());
  for (const auto& u : all_words(len)) out.pieces.push_back(f[reversed(u)].reflected());
  return out;
}

/// Bilinear integral of f * g over [0,1]^m (no conjugation).
template <class Fn>
typename Fn::Scalar integrate_product(const Piecewise<Fn>& f, const Piecewise<Fn>& g) {
  if (f.m != g.m || f.pieces.size() != g.pieces.size()) {
    throw std::invalid_argument("integrate_product: dimension mismatch");
  }
  const std::size_t len = f.m >= 1 ? static_cast<std::size_t>(f.m - 1) : 0;
  const Fn one = Fn::constant(typename Fn::Scalar(1));
  typename Fn::Scalar sum(0);
  for (const auto& u : all_words(len)) {
    const Fn& fu = f[u];
    const Fn& gu = g[u];
    if (f.variable == Variable::first && g.variable == Variable::last) {
      sum += polytope_integral(u, fu, gu);
    } else if (f.variable == Variable::last && g.variable == Variable::first) {
      sum += polytope_integral(u, gu, fu);
    } else if (f.variable == Variable::first) {
      sum += polytope_integral(u, fu * gu, one);
    } else {
      sum += polytope_integral(u, one, fu * gu);
    }
  }
  return sum;
}

/// <f, g> = integral of f * conj(g).
Complex inner(const PiecewiseFn& f, const PiecewiseFn& g);

struct Pairings {
  Complex phi_mu;    // <phi, mu>
  Complex kappa_psi; // <kappa, conj psi>
  Complex phi_psi;   // <phi, conj psi>
};

Pairings inner_products(const PiecewiseFn& phi, const PiecewiseFn& psi, const PiecewiseFn& kappa,
                        const PiecewiseFn& mu);

class VanishingPairingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// <phi,mu> <kappa,conj psi> / <phi,conj psi>. Throws VanishingPairingError
/// when |<phi,conj psi>| <= 1e-10, which signals a possibly non-simple
/// eigenvalue.
Complex asymptotic_constant(const PiecewiseFn& phi, const PiecewiseFn& psi, const PiecewiseFn& kappa,
                            const PiecewiseFn& mu);

/// Thrown when constants are requested for a scheme whose kernel is not
/// invariant under word reversal.
class AdjointUnavailableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Mode {
  Complex lambda;
  Complex constant;
  Pairings pairings;
  double imag_residue = 0;  // constant vs conjugate partner's constant, before averaging
};

struct AsymptoticModel {
  int m = 0;
  std::vector<Mode> modes;
  /// Modulus of the largest eigenvalue left out (error scale of the expansion).
  double r_hat = 0;
};

/// Constants for the leading `top_k` entries of `points` (sorted as by
/// spectral::sort_spectrum). A conjugate partner of an included eigenvalue is
/// always included. `floor` is used for r_hat when nothing is left out.
/// Throws AdjointUnavailableError unless is_kernel_symmetric(s), and
/// std::domain_error for an included point without the simplicity
/// certificate.
AsymptoticModel asymptotic_model(const WeightScheme& s, const std::vector<spectral::SpectralPoint>& points,
                                 std::size_t top_k, double floor);

struct Prediction {
  double value = 0;
  double imag_residue = 0;
  double r_hat = 0;
};

/// sum_i c_i lambda_i^{n-m}. Requires n >= m.
Prediction predict_alpha(const AsymptoticModel& model, int n);

/// (T f)|P_{uy}(x) = sum over letters z of wt(zuy) times the integral of
/// f|P_{zu} over [0,x] (z = a) or [x,1] (z = b).
PiecewiseFn apply_operator(const spectral::TransferPair& t, const PiecewiseFn& f);
PiecewisePoly apply_operator(const spectral::ExactTransfer& t, const PiecewisePoly& f);

/// alpha_n = n! <T^{n-m} kappa, mu> in exact arithmetic. For n < m it is
/// n! times the total volume of the polytopes P_u, |u| = n-1, that pass
/// the filter. A non-empty filter needs m >= 2 and n >= 2.
exact::WeightedCount alpha_by_operator_iteration(const WeightScheme& s, int n,
                                                 exact::EndFilter filter = {});

}  // namespace descent::expfun
