#include "descent/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

namespace descent::linalg {

namespace {

void check_dimension(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix not square");
  if (m.rows() > kMaxDimension) {
    throw std::invalid_argument(std::string(what) + ": dimension above " +
                                std::to_string(kMaxDimension));
  }
}

bool all_finite(const CMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

// exp for a matrix that is already validated; also used on the 2d x 2d block.
CMatrix exp_unchecked(const CMatrix& m) {
  const Eigen::Index d = m.rows();
  const double norm = norm1(m);
  if (!std::isfinite(norm)) throw OverflowError("mat_exp: non-finite input");

  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMatrix x = m / std::ldexp(1.0, squarings);

  // Paterson-Stockmeyer evaluation of sum_{k<=18} x^k / k! in blocks of four.
  constexpr int kDegree = 18;
  double coeff[kDegree + 1];
  coeff[0] = 1.0;
  for (int k = 1; k <= kDegree; ++k) coeff[k] = coeff[k - 1] / k;

  const CMatrix id = CMatrix::Identity(d, d);
  const CMatrix x2 = x * x;
  const CMatrix x3 = x2 * x;
  const CMatrix x4 = x2 * x2;
  auto block = [&](int j) {
    CMatrix b = coeff[4 * j] * id;
    const CMatrix* powers[] = {&x, &x2, &x3};
    for (int i = 1; i < 4 && 4 * j + i <= kDegree; ++i) b += coeff[4 * j + i] * *powers[i - 1];
    return b;
  };
  CMatrix result = block(kDegree / 4);
  for (int j = kDegree / 4 - 1; j >= 0; --j) result = result * x4 + block(j);

  for (int s = 0; s < squarings; ++s) result = result * result;
  if (!all_finite(result)) {
    throw OverflowError("mat_exp: result overflows (||M||_1 = " + std::to_string(norm) + ")");
  }
  return result;
}

}  // namespace

double norm1(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) best = std::max(best, m.col(j).cwiseAbs().sum());
  return best;
}

double norm_inf(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) best = std::max(best, m.row(i).cwiseAbs().sum());
  return best;
}

CMatrix mat_exp(const CMatrix& m) {
  check_dimension(m, "mat_exp");
  return exp_unchecked(m);
}

CMatrix gamma(const CMatrix& m) {
  check_dimension(m, "gamma");
  const Eigen::Index d = m.rows();
  CMatrix big = CMatrix::Zero(2 * d, 2 * d);
  big.topLeftCorner(d, d) = m;
  big.topRightCorner(d, d) = CMatrix::Identity(d, d);
  return exp_unchecked(big).topRightCorner(d, d);
}

Complex det(const CMatrix& m) {
  check_dimension(m, "det");
  CMatrix lu = m;
  const Eigen::Index d = lu.rows();
  Complex result(1.0, 0.0);
  for (Eigen::Index k = 0; k < d; ++k) {
    Eigen::Index pivot = k;
    for (Eigen::Index i = k + 1; i < d; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    }
    if (lu(pivot, k) == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    if (pivot != k) {
      lu.row(k).swap(lu.row(pivot));
      result = -result;
    }
    result *= lu(k, k);
    for (Eigen::Index i = k + 1; i < d; ++i) {
      const Complex factor = lu(i, k) / lu(k, k);
      lu.row(i).tail(d - k - 1) -= factor * lu.row(k).tail(d - k - 1);
    }
  }
  return result;
}

double default_null_tolerance(const CMatrix& m) {
  return 1e-8 * std::max(norm1(m), 1e-300);
}

Eigen::VectorXd singular_values(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues();
}

CVector nullspace_vector(const CMatrix& m, double tol) {
  check_dimension(m, "nullspace_vector");
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::Index d = m.cols();
  const double smallest = svd.singularValues()(d - 1);
  if (!(smallest < tol)) {
    throw NotSingularError("matrix not singular at this tolerance (smallest singular value " +
                           std::to_string(smallest) + ", tolerance " + std::to_string(tol) + ")");
  }
  CVector v = svd.matrixV().col(d - 1);
  v.normalize();
  Eigen::Index lead = 0;
  for (Eigen::Index i = 1; i < d; ++i) {
    // ties resolved toward the first entry; equal moduli within rounding
    if (std::abs(v(i)) > std::abs(v(lead)) * (1.0 + 1e-12)) lead = i;
  }
  v *= std::conj(v(lead)) / std::abs(v(lead));
  v(lead) = Complex(v(lead).real(), 0.0);
  return v;
}

}  // namespace descent::linalg
