#include <doctest.h>

#include <cmath>
#include <random>

#include "descent/linalg.hpp"
#include "descent/presets.hpp"
#include "descent/spectral.hpp"

using namespace descent;
using namespace descent::linalg;

namespace {

CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index d, double norm) {
  std::normal_distribution<double> g;
  CMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m * (norm / norm1(m));
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("norms") {
  CMatrix m(2, 2);
  m << 1.0, -2.0, Complex(0, 3), 4.0;
  CHECK(norm1(m) == doctest::Approx(6.0));
  CHECK(norm_inf(m) == doctest::Approx(7.0));
}

TEST_CASE("matrix exponential examples") {
  CHECK(max_abs(mat_exp(CMatrix::Zero(3, 3)) - CMatrix::Identity(3, 3)) == 0.0);
  CMatrix scalar(1, 1);
  scalar(0, 0) = Complex(0.7, -1.3);
  CHECK(std::abs(mat_exp(scalar)(0, 0) - std::exp(Complex(0.7, -1.3))) < 1e-14);

  CMatrix nilpotent = CMatrix::Zero(2, 2);
  nilpotent(0, 1) = 5.0;
  const CMatrix e = mat_exp(nilpotent);
  CHECK(std::abs(e(0, 1) - 5.0) < 1e-14);
  CHECK(std::abs(e(0, 0) - 1.0) < 1e-14);
}

TEST_CASE("exponential of the {aaa, bbb} kernel") {
  const auto t = spectral::build_transfer(preset("sec5-1").scheme);
  const double lambda0 = 0.9240358576;
  const double sigma = std::sqrt((-1 + std::sqrt(5.0)) / 2);
  const double tau = std::sqrt((1 + std::sqrt(5.0)) / 2);
  const CMatrix e = mat_exp((t.A - t.B) / lambda0);
  Eigen::ComplexEigenSolver<CMatrix> solver(e);
  const Complex expected[] = {std::exp(Complex(sigma / lambda0, 0)), std::exp(Complex(-sigma / lambda0, 0)),
                              std::exp(Complex(0, tau / lambda0)), std::exp(Complex(0, -tau / lambda0))};
  for (const Complex& z : expected) {
    double best = 1e9;
    for (Eigen::Index i = 0; i < 4; ++i) best = std::min(best, std::abs(solver.eigenvalues()(i) - z));
    CHECK(best < 1e-9);
  }
}

TEST_CASE("exp(M) exp(-M) = I") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix m = random_matrix(rng, 1 + trial % 8, 10.0 * (trial + 1) / 50);
    const CMatrix prod = mat_exp(m) * mat_exp(-m);
    CHECK(max_abs(prod - CMatrix::Identity(m.rows(), m.cols())) < 1e-11);
  }
}

TEST_CASE("exponential overflow") {
  CMatrix m(1, 1);
  m(0, 0) = 1000.0;
  CHECK_THROWS_AS(mat_exp(m), OverflowError);
  CHECK_THROWS_AS(gamma(m), OverflowError);
}

TEST_CASE("gamma examples") {
  CHECK(max_abs(gamma(CMatrix::Zero(4, 4)) - CMatrix::Identity(4, 4)) < 1e-15);
  CMatrix scalar(1, 1);
  const Complex mu(-0.4, 2.0);
  scalar(0, 0) = mu;
  CHECK(std::abs(gamma(scalar)(0, 0) - (std::exp(mu) - 1.0) / mu) < 1e-14);
}

TEST_CASE("gamma identities") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index d = 1 + trial % 8;
    const CMatrix m = random_matrix(rng, d, 0.1 + 4.9 * trial / 100);
    const CMatrix g = gamma(m);
    const CMatrix e = mat_exp(m);
    const CMatrix id = CMatrix::Identity(d, d);
    CHECK(max_abs(m * g + id - e) < 1e-12 * std::max(1.0, max_abs(e)));

    // direct series
    CMatrix series = CMatrix::Zero(d, d);
    CMatrix power = id;
    double fact = 1;
    for (int k = 0; k <= 40; ++k) {
      fact *= (k + 1);
      series += power / fact;
      power = power * m;
    }
    CHECK(max_abs(series - g) < 1e-12 * std::max(1.0, max_abs(g)));
  }
}

TEST_CASE("derivative of t gamma(Mt) is exp(Mt)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.1, 0.9);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix m = random_matrix(rng, 3, 3.0);
    const double t = unif(rng);
    const double h = 1e-5;
    const CMatrix deriv = ((t + h) * gamma(m * (t + h)) - (t - h) * gamma(m * (t - h))) / (2 * h);
    CHECK(max_abs(deriv - mat_exp(m * t)) < 1e-8 * std::max(1.0, max_abs(mat_exp(m * t))));
  }
}

TEST_CASE("determinant") {
  CHECK(std::abs(det(CMatrix::Identity(5, 5)) - 1.0) < 1e-15);
  CMatrix diag = CMatrix::Zero(2, 2);
  diag(0, 0) = 2.0;
  diag(1, 1) = 3.0;
  CHECK(std::abs(det(diag) - 6.0) < 1e-15);
  const auto t = spectral::build_transfer(preset("sec6").scheme);
  CHECK(std::abs(det(spectral::p_matrix(t, 1.0))) < 1e-12);
}

TEST_CASE("null space vectors") {
  const auto t6 = spectral::build_transfer(preset("sec6").scheme);
  const CVector c6 = nullspace_vector(spectral::p_matrix(t6, 1.0));
  CHECK(std::abs(c6(1) / c6(0) - 2.0) < 1e-9);
  CHECK(std::abs(c6.norm() - 1.0) < 1e-12);

  struct Case {
    const char* name;
    double lambda;
    double expected[4];
  };
  const Case cases[] = {{"sec5-1", 0.92403585760753, {0.6536190979, 0.6536190979, 0.3815287011, 0}},
                        {"sec5-2", 0.68697650316, {0.4315640876, 0, 0.6378684967, 0.6378684967}}};
  for (const auto& cs : cases) {
    INFO(cs.name);
    const auto t = spectral::build_transfer(preset(cs.name).scheme);
    const auto roots = spectral::find_real_roots(t, 0.5, 1.5);
    REQUIRE_FALSE(roots.empty());
    const CMatrix p = spectral::p_matrix(t, roots.front().lambda);
    const double tol = default_null_tolerance(p);
    const CVector c = nullspace_vector(p, tol);
    CHECK((p * c).norm() <= 10 * tol);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(c(i) - cs.expected[i]) < 1e-8);
  }
}

TEST_CASE("null space vector refuses regular matrices") {
  CHECK_THROWS_AS(nullspace_vector(CMatrix::Identity(3, 3)), NotSingularError);
  try {
    nullspace_vector(CMatrix::Identity(3, 3));
  } catch (const NotSingularError& e) {
    CHECK(std::string(e.what()).find("not singular") != std::string::npos);
  }
}

TEST_CASE("singular values") {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = Complex(0, -4);
  const auto sv = singular_values(m);
  CHECK(sv(0) == doctest::Approx(4.0));
  CHECK(sv(1) == doctest::Approx(3.0));
}

}  // TEST_SUITE
