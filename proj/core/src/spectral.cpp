#include "descent/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>

namespace descent::spectral {

ExactTransfer exact_transfer(const WeightScheme& s) {
  ExactTransfer t;
  t.m = s.m();
  if (s.m() == 1) {
    t.dimension = 1;
    const ABWord a = ABWord::parse("a"), b = ABWord::parse("b");
    if (s.wt(a) != 0) t.a.push_back({0, 0, s.wt(a)});
    if (s.wt(b) != 0) t.b.push_back({0, 0, s.wt(b)});
    return t;
  }
  t.dimension = std::size_t{1} << (s.m() - 1);
  for (const auto& u : all_words(static_cast<std::size_t>(s.m() - 2))) {
    for (Letter y : {Letter::a, Letter::b}) {
      const std::uint64_t row = (u + y).index();
      const Rational& wa = s.wt(Letter::a + u + y);
      const Rational& wb = s.wt(Letter::b + u + y);
      if (wa != 0) t.a.push_back({row, (Letter::a + u).index(), wa});
      if (wb != 0) t.b.push_back({row, (Letter::b + u).index(), wb});
    }
  }
  return t;
}

TransferPair build_transfer(const WeightScheme& s) {
  const ExactTransfer e = exact_transfer(s);
  const auto d = static_cast<Eigen::Index>(e.dimension);
  TransferPair t{s.m(), CMatrix::Zero(d, d), CMatrix::Zero(d, d)};
  for (const auto& x : e.a) t.A(x.row, x.col) = x.weight.get_d();
  for (const auto& x : e.b) t.B(x.row, x.col) = x.weight.get_d();
  return t;
}

double spectral_scale(const TransferPair& t) {
  return std::max(1.0, linalg::norm_inf(t.A) + linalg::norm_inf(t.B));
}

double min_usable_modulus(const TransferPair& t) {
  // entries of exp stay below ~1e300 while ||M||_1 <= 690
  return linalg::norm1(t.A - t.B) / 690.0;
}

CMatrix p_matrix(const TransferPair& t, Complex lambda) {
  if (lambda == Complex(0.0, 0.0)) throw std::domain_error("P(lambda) undefined at lambda = 0");
  const Eigen::Index d = t.A.rows();
  const double floor = min_usable_modulus(t);
  if (std::abs(lambda) < floor) {
    throw linalg::OverflowError("|lambda| = " + std::to_string(std::abs(lambda)) +
                                " below the minimum usable modulus " + std::to_string(floor));
  }
  try {
    const CMatrix m = (t.A - t.B) / lambda;
    return -lambda * CMatrix::Identity(d, d) + t.B * linalg::gamma(m);
  } catch (const linalg::OverflowError&) {
    throw linalg::OverflowError("exp((A-B)/lambda) overflows at |lambda| = " +
                                std::to_string(std::abs(lambda)) + "; minimum usable |lambda| is " +
                                std::to_string(floor));
  }
}

Complex det_P(const TransferPair& t, Complex lambda) { return linalg::det(p_matrix(t, lambda)); }

Complex det_M_product_check(const TransferPair& t, Complex lambda) {
  if (lambda == Complex(0.0, 0.0)) throw std::domain_error("lambda must be non-zero");
  const CMatrix diff = t.A - t.B;
  const Eigen::VectorXd sv = linalg::singular_values(diff);
  if (sv(sv.size() - 1) <= 1e-12 * std::max(1.0, sv(0))) {
    throw std::domain_error("A - B is singular; use det_P for this scheme");
  }
  return linalg::det(-t.A + t.B * linalg::mat_exp(diff / lambda));
}

bool is_simple(const TransferPair& t, Complex lambda, const CVector& c) {
  const CVector v = t.B * linalg::mat_exp((t.A - t.B) / lambda) * c;
  return v.norm() > 1e-8 * c.norm();
}

SpectralPoint make_point(const TransferPair& t, Complex lambda) {
  const CMatrix p = p_matrix(t, lambda);
  SpectralPoint pt;
  pt.lambda = lambda;
  pt.c = linalg::nullspace_vector(p);
  pt.residual = std::abs(linalg::det(p));
  pt.simple = is_simple(t, lambda, pt.c);
  return pt;
}

void sort_spectrum(std::vector<SpectralPoint>& points) {
  std::stable_sort(points.begin(), points.end(), [](const SpectralPoint& x, const SpectralPoint& y) {
    const double ax = std::abs(x.lambda), ay = std::abs(y.lambda);
    if (std::abs(ax - ay) > 1e-12 * std::max(1.0, ax)) return ax > ay;
    return std::arg(x.lambda) < std::arg(y.lambda);
  });
}

namespace {

constexpr double kMergeDistance = 1e-8;

double real_det(const TransferPair& t, double lambda) { return det_P(t, Complex(lambda, 0.0)).real(); }

// Bracketed polish: bisection to shrink the bracket, then Illinois steps.
double polish_bracket(const TransferPair& t, double lo, double hi, double flo, double fhi) {
  for (int i = 0; i < 30 && hi - lo > 1e-6 * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = real_det(t, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  int side = 0;
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    double x = hi - fhi * (hi - lo) / (fhi - flo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    const double fx = real_det(t, x);
    if (fx == 0.0) return x;
    if ((fx < 0) == (flo < 0)) {
      lo = x;
      flo = fx;
      if (side == -1) fhi *= 0.5;
      side = -1;
    } else {
      hi = x;
      fhi = fx;
      if (side == 1) flo *= 0.5;
      side = 1;
    }
    if (std::abs(hi - lo) <= 1e-13) break;
  }
  return std::abs(flo) < std::abs(fhi) ? lo : hi;
}

void scan_interval(const TransferPair& t, double lo, double hi, int samples,
                   std::vector<double>& roots) {
  if (samples < 2 || !(hi > lo)) return;
  std::vector<double> xs(static_cast<std::size_t>(samples)), fs(xs.size());
  for (int k = 0; k < samples; ++k) {
    xs[k] = lo + (hi - lo) * k / (samples - 1);
    fs[k] = real_det(t, xs[k]);
  }
  for (int k = 0; k + 1 < samples; ++k) {
    if (fs[k] == 0.0) {
      roots.push_back(xs[k]);
    } else if (fs[k + 1] != 0.0 && (fs[k] < 0) != (fs[k + 1] < 0)) {
      roots.push_back(polish_bracket(t, xs[k], xs[k + 1], fs[k], fs[k + 1]));
    }
  }
  if (fs.back() == 0.0) roots.push_back(xs.back());
}

bool accept(const SpectralPoint& p) { return std::isfinite(p.residual); }

void merge_into(std::vector<SpectralPoint>& out, SpectralPoint p) {
  for (const auto& q : out) {
    if (std::abs(q.lambda - p.lambda) <= kMergeDistance * std::max(1.0, std::abs(p.lambda))) {
      return;
    }
  }
  out.push_back(std::move(p));
}

}  // namespace

std::vector<SpectralPoint> find_real_roots(const TransferPair& t, double lo, double hi,
                                           const RealSearchOptions& options) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("find_real_roots: need 0 < lo < hi");
  const double floor = 1.05 * min_usable_modulus(t);
  if (lo < floor) {
    std::clog << "warning: real search lower bound " << lo << " clipped to " << floor
              << " (exp overflow floor)\n";
    lo = floor;
  }
  std::vector<double> roots;
  scan_interval(t, lo, hi, options.samples, roots);
  if (options.include_negative) {
    std::vector<double> neg;
    scan_interval(t, -hi, -lo, options.samples, neg);
    roots.insert(roots.end(), neg.begin(), neg.end());
  }
  std::vector<SpectralPoint> out;
  for (double r : roots) {
    try {
      SpectralPoint p = make_point(t, Complex(r, 0.0));
      if (accept(p)) merge_into(out, std::move(p));
    } catch (const linalg::NotSingularError&) {
      // sign change without a singular P: a discontinuity from rounding, not a root
    }
  }
  sort_spectrum(out);
  return out;
}

namespace {

struct NewtonResult {
  bool converged = false;
  Complex root;
};

NewtonResult newton(const TransferPair& t, Complex z, double exclude, int max_iterations) {
  for (int it = 0; it < max_iterations; ++it) {
    const double scale = std::abs(z);
    if (!(scale >= exclude)) return {};
    const double h = 1e-7 * scale;
    const Complex f = det_P(t, z);
    if (f == Complex(0.0, 0.0)) return {true, z};
    const Complex df = (det_P(t, z + h) - det_P(t, z - h)) / (2.0 * h);
    if (df == Complex(0.0, 0.0) || !std::isfinite(std::abs(df))) return {};
    Complex step = f / df;
    if (!std::isfinite(std::abs(step))) return {};
    if (std::abs(step) > 0.5 * scale) step *= 0.5 * scale / std::abs(step);
    z -= step;
    if (std::abs(step) <= 1e-14 * std::max(1.0, std::abs(z))) return {true, z};
  }
  return {};
}

bool inside(const ComplexBox& box, Complex z) {
  const double tol = 1e-9;
  return z.real() >= box.re_lo - tol && z.real() <= box.re_hi + tol && z.imag() >= box.im_lo - tol &&
         z.imag() <= box.im_hi + tol;
}

Complex snap_real(Complex z) {
  if (std::abs(z.imag()) <= 1e-10 * std::max(1.0, std::abs(z))) return {z.real(), 0.0};
  return z;
}

}  // namespace

std::vector<SpectralPoint> find_complex_roots(const TransferPair& t, const ComplexBox& box,
                                              const ComplexSearchOptions& options) {
  const double exclude = std::max(options.exclude, 1.05 * min_usable_modulus(t));
  std::vector<Complex> found;
  auto known = [&](Complex z) {
    return std::any_of(found.begin(), found.end(), [&](Complex w) {
      return std::abs(w - z) <= kMergeDistance * std::max(1.0, std::abs(z));
    });
  };
  auto attempt = [&](Complex seed) {
    NewtonResult r;
    try {
      r = newton(t, seed, exclude, options.max_iterations);
    } catch (const linalg::OverflowError&) {
      return;
    }
    if (!r.converged) return;
    const Complex z = snap_real(r.root);
    if (std::abs(z) < exclude || !inside(box, z) || known(z)) return;
    found.push_back(z);
  };

  const int g = options.grid;
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      const Complex seed(box.re_lo + (box.re_hi - box.re_lo) * (i + 0.5) / g,
                         box.im_lo + (box.im_hi - box.im_lo) * (j + 0.5) / g);
      if (std::abs(seed) < exclude) continue;
      attempt(seed);
    }
  }
  // real weights: the root set is closed under conjugation
  const std::size_t n = found.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (found[k].imag() != 0.0 && !known(std::conj(found[k]))) attempt(std::conj(found[k]));
  }

  std::vector<SpectralPoint> out;
  for (Complex z : found) {
    try {
      SpectralPoint p = make_point(t, z);
      if (accept(p)) merge_into(out, std::move(p));
    } catch (const linalg::NotSingularError&) {
    } catch (const linalg::OverflowError&) {
    }
  }
  sort_spectrum(out);
  return out;
}

SearchRegion default_region(const TransferPair& t) {
  const double rho = spectral_scale(t);
  return {0.05 * rho, 2.0 * rho, ComplexBox{-2.0 * rho, 2.0 * rho, -2.0 * rho, 2.0 * rho},
          0.05 * rho};
}

std::vector<SpectralPoint> spectrum(const TransferPair& t, const SearchRegion& region) {
  RealSearchOptions ro;
  ro.include_negative = true;
  std::vector<SpectralPoint> out = find_real_roots(t, region.real_lo, region.real_hi, ro);
  ComplexSearchOptions co;
  co.exclude = region.exclude;
  for (auto& p : find_complex_roots(t, region.box, co)) merge_into(out, std::move(p));
  sort_spectrum(out);
  return out;
}

}  // namespace descent::spectral
