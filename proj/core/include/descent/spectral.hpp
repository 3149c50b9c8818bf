#pragma once

// Transfer matrices of a weight scheme and the spectral equation
//
//   det P(lambda) = 0,   P(lambda) = -lambda I + B gamma((A - B) / lambda),
//
// whose non-zero roots are the non-zero eigenvalues of the restricted integral
// operator (T p)(x) = A int_0^x p + B int_x^1 p.

#include <vector>

#include "descent/linalg.hpp"
#include "descent/words.hpp"

namespace descent::spectral {

using linalg::CMatrix;
using linalg::Complex;
using linalg::CVector;

/// One non-zero entry of A or B: row uy, column au (A) or bu (B).
struct TransferEntry {
  std::uint64_t row;
  std::uint64_t col;
  Rational weight;
};

/// Exact entries A_{uy,au} = wt(auy), B_{uy,bu} = wt(buy), indexed by words of
/// length m-1 in lexicographic order. For m = 1 both are 1x1: [wt(a)], [wt(b)].
struct ExactTransfer {
  int m = 0;
  std::size_t dimension = 0;
  std::vector<TransferEntry> a;
  std::vector<TransferEntry> b;
};
ExactTransfer exact_transfer(const WeightScheme& s);

struct TransferPair {
  int m = 0;
  CMatrix A;
  CMatrix B;
};
TransferPair build_transfer(const WeightScheme& s);

/// max(1, ||A||_inf + ||B||_inf); every eigenvalue has modulus below it.
double spectral_scale(const TransferPair& t);

/// Smallest |lambda| at which e^{(A-B)/lambda} stays representable.
double min_usable_modulus(const TransferPair& t);

CMatrix p_matrix(const TransferPair& t, Complex lambda);

/// det P(lambda). Throws linalg::OverflowError naming the minimum usable
/// |lambda| when (A-B)/lambda is too large, std::domain_error for lambda = 0.
Complex det_P(const TransferPair& t, Complex lambda);

/// det(-A + B e^{(A-B)/lambda}) = det P * det((A-B)/lambda). Throws
/// std::domain_error when A - B is singular.
Complex det_M_product_check(const TransferPair& t, Complex lambda);

/// B e^{(A-B)/lambda} c != 0, measured as a norm above 1e-8 ||c||; a
/// sufficient condition for lambda to be a simple eigenvalue.
bool is_simple(const TransferPair& t, Complex lambda, const CVector& c);

struct SpectralPoint {
  Complex lambda;
  CVector c;           // unit null vector of P(lambda), p(0) of the eigenfunction
  bool simple = false; // the sufficient certificate held
  double residual = 0; // |det P(lambda)|
};

struct RealSearchOptions {
  int samples = 2000;
  bool include_negative = false;  // also scan [-hi, -lo]
};

/// Sign changes of det P on a uniform grid over [lo, hi], each bracket
/// polished by bisection and secant steps.
std::vector<SpectralPoint> find_real_roots(const TransferPair& t, double lo, double hi,
                                           const RealSearchOptions& options = {});

struct ComplexBox {
  double re_lo, re_hi, im_lo, im_hi;
};

struct ComplexSearchOptions {
  int grid = 60;           // seeds per side
  double exclude = 0.05;   // seeds and roots with |lambda| below this are dropped
  int max_iterations = 60;
};

/// Newton iteration on det P from a grid of seeds over the box; converged
/// roots merged at distance 1e-8.
std::vector<SpectralPoint> find_complex_roots(const TransferPair& t, const ComplexBox& box,
                                              const ComplexSearchOptions& options = {});

/// Default search region: |lambda| in [0.05 rho, 2 rho] with rho from
/// spectral_scale.
struct SearchRegion {
  double real_lo, real_hi;
  ComplexBox box;
  double exclude;
};
SearchRegion default_region(const TransferPair& t);

/// Real scan plus complex Newton over the region, merged and sorted by
/// descending modulus, ties by ascending argument.
std::vector<SpectralPoint> spectrum(const TransferPair& t, const SearchRegion& region);
inline std::vector<SpectralPoint> spectrum(const TransferPair& t) {
  return spectrum(t, default_region(t));
}

/// Packages a converged root: null vector, certificate, residual.
SpectralPoint make_point(const TransferPair& t, Complex lambda);

void sort_spectrum(std::vector<SpectralPoint>& points);

}  // namespace descent::spectral
