#pragma once

// Small dense complex matrix kernel: exponential, gamma(M) = int_0^1 e^{Mt} dt,
// determinant and a null-space direction. Dimensions are 2^(m-1) <= 64.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace descent::linalg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Eigen::Index kMaxDimension = 64;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class NotSingularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Max absolute column sum.
double norm1(const CMatrix& m);
/// Max absolute row sum.
double norm_inf(const CMatrix& m);

/// e^M by scaling and squaring: M / 2^s with norm at most 1/2, Taylor
/// polynomial of degree 18, then s squarings. Throws OverflowError if the
/// result is not finite.
CMatrix mat_exp(const CMatrix& m);

/// gamma(M) = sum_k M^k / (k+1)!, read off as the top-right block of
/// exp([[M, I], [0, 0]]).
CMatrix gamma(const CMatrix& m);

/// LU with partial pivoting.
Complex det(const CMatrix& m);

/// Default singular-value threshold, 1e-8 * ||M||.
double default_null_tolerance(const CMatrix& m);

/// Unit vector along the right singular direction of the smallest singular
/// value, rotated so its largest-modulus entry is real and positive. Throws
/// NotSingularError if that singular value is not below `tol`.
CVector nullspace_vector(const CMatrix& m, double tol);
inline CVector nullspace_vector(const CMatrix& m) {
  return nullspace_vector(m, default_null_tolerance(m));
}

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const CMatrix& m);

}  // namespace descent::linalg
