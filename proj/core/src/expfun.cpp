#include "descent/expfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace descent::expfun {

namespace {

PiecewiseFn constants_from(const WeightScheme& s, bool initial) {
  PiecewiseFn f{s.m(), Variable::first, {}};
  for (std::size_t i = 0; i < s.state_count(); ++i) {
    const Rational& w = initial ? s.wt1(i) : s.wt2(i);
    f.pieces.push_back(ExpPoly::constant(Complex(w.get_d(), 0.0)));
  }
  return f;
}

PiecewisePoly exact_constants_from(const WeightScheme& s, bool initial) {
  PiecewisePoly f{s.m(), Variable::first, {}};
  for (std::size_t i = 0; i < s.state_count(); ++i) {
    f.pieces.push_back(RationalPoly::constant(initial ? s.wt1(i) : s.wt2(i)));
  }
  return f;
}

struct Cluster {
  Complex center;
  int size = 0;
};

// Groups eigenvalues of M lying within `tol` of an existing cluster member.
std::vector<Cluster> cluster_eigenvalues(const CMatrix& m, double tol) {
  Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) throw JordanStructureError("eigenvalue computation failed");
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  std::vector<int> label(values.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = next;
    // grow the cluster transitively
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (label[j] >= 0) continue;
        for (std::size_t k = 0; k < values.size(); ++k) {
          if (label[k] == next && std::abs(values[j] - values[k]) <= tol) {
            label[j] = next;
            grew = true;
            break;
          }
        }
      }
    }
    ++next;
  }
  std::vector<Cluster> clusters(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < values.size(); ++i) {
    clusters[label[i]].center += values[i];
    clusters[label[i]].size += 1;
  }
  for (auto& c : clusters) {
    c.center /= static_cast<double>(c.size);
    if (std::abs(c.center) <= ExpPoly::kMergeTolerance) c.center = Complex(0.0, 0.0);
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& x, const Cluster& y) {
    if (x.center.real() != y.center.real()) return x.center.real() < y.center.real();
    return x.center.imag() < y.center.imag();
  });
  return clusters;
}

}  // namespace

PiecewiseFn initial_weights(const WeightScheme& s) { return constants_from(s, true); }
PiecewiseFn final_weights(const WeightScheme& s) { return constants_from(s, false); }
PiecewisePoly initial_weights_exact(const WeightScheme& s) { return exact_constants_from(s, true); }
PiecewisePoly final_weights_exact(const WeightScheme& s) { return exact_constants_from(s, false); }

PiecewiseFn eigenfunction_pieces(const spectral::TransferPair& t, Complex lambda, const CVector& c) {
  if (lambda == Complex(0.0, 0.0)) throw std::domain_error("eigenfunction_pieces: lambda = 0");
  const Eigen::Index d = t.A.rows();
  if (c.size() != d) throw std::invalid_argument("eigenfunction_pieces: vector size mismatch");
  const CMatrix m = (t.A - t.B) / lambda;
  const double scale = std::max(1.0, linalg::norm1(m));

  // Eigenvalues of a Jordan block of size k split by about eps^{1/k}; 1e-5
  // relative groups blocks up to size 3 and keeps distinct values apart.
  const auto clusters = cluster_eigenvalues(m, 1e-5 * scale);

  // Generalized eigenspace of each cluster: null space of (M - mu)^k.
  CMatrix basis(d, d);
  Eigen::Index col = 0;
  for (const auto& cl : clusters) {
    const CMatrix shifted = m - cl.center * CMatrix::Identity(d, d);
    CMatrix power = CMatrix::Identity(d, d);
    for (int j = 0; j < cl.size; ++j) power = power * shifted;
    Eigen::JacobiSVD<CMatrix> svd(power, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-8 * std::pow(scale, cl.size);
    int null_dim = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) null_dim += sv(i) <= tol ? 1 : 0;
    if (null_dim != cl.size) {
      std::ostringstream msg;
      msg << "eigenfunction_pieces: eigenvalue " << cl.center << " of multiplicity " << cl.size
          << " has a generalized eigenspace of dimension " << null_dim << " at tolerance " << tol;
      throw JordanStructureError(msg.str());
    }
    basis.middleCols(col, cl.size) = svd.matrixV().rightCols(cl.size);
    col += cl.size;
  }
  const CVector coords = basis.colPivHouseholderQr().solve(c);

  PiecewiseFn phi{t.m, Variable::first, std::vector<ExpPoly>(static_cast<std::size_t>(d))};
  col = 0;
  for (const auto& cl : clusters) {
    const CMatrix shifted = m - cl.center * CMatrix::Identity(d, d);
    CVector w = basis.middleCols(col, cl.size) * coords.segment(col, cl.size);
    col += cl.size;
    // e^{Mx} v = e^{mu x} sum_j x^j/j! (M - mu)^j v on the generalized eigenspace
    double factorial = 1.0;
    for (int j = 0; j < cl.size; ++j) {
      if (j > 0) {
        w = shifted * w;
        factorial *= j;
      }
      for (Eigen::Index u = 0; u < d; ++u) phi.pieces[u].add(w(u) / factorial, j, cl.center);
    }
  }

  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const CVector expected = linalg::mat_exp(m * x) * c;
    double err = 0.0;
    for (Eigen::Index u = 0; u < d; ++u) err = std::max(err, std::abs(phi.pieces[u](x) - expected(u)));
    const double bound = 1e-8 * std::max(1.0, expected.cwiseAbs().maxCoeff());
    if (!(err <= bound)) {
      std::ostringstream msg;
      msg << "eigenfunction_pieces: closed form deviates from e^{Mx}c by " << err << " at x = " << x;
      throw JordanStructureError(msg.str());
    }
  }
  return phi;
}

Complex inner(const PiecewiseFn& f, const PiecewiseFn& g) {
  PiecewiseFn gbar{g.m, g.variable, {}};
  for (const auto& p : g.pieces) gbar.pieces.push_back(p.conj());
  return integrate_product(f, gbar);
}

Pairings inner_products(const PiecewiseFn& phi, const PiecewiseFn& psi, const PiecewiseFn& kappa,
                        const PiecewiseFn& mu) {
  if (phi.variable != Variable::first || psi.variable != Variable::last) {
    throw std::invalid_argument("inner_products: phi must be in x_1 and psi in x_m");
  }
  // <f, conj psi> = integral of f * psi
  return {integrate_product(phi, mu), integrate_product(kappa, psi), integrate_product(phi, psi)};
}

Complex asymptotic_constant(const PiecewiseFn& phi, const PiecewiseFn& psi, const PiecewiseFn& kappa,
                            const PiecewiseFn& mu) {
  const Pairings p = inner_products(phi, psi, kappa, mu);
  if (std::abs(p.phi_psi) <= 1e-10) {
    throw VanishingPairingError("asymptotic_constant: <phi, conj psi> vanishes; the eigenvalue may not be simple");
  }
  return p.phi_mu * p.kappa_psi / p.phi_psi;
}

namespace {

Mode mode_for(const spectral::TransferPair& t, const spectral::SpectralPoint& point,
              const PiecewiseFn& kappa, const PiecewiseFn& mu) {
  const PiecewiseFn phi = eigenfunction_pieces(t, point.lambda, point.c);
  const PiecewiseFn psi = apply_J(phi);
  Mode mode;
  mode.lambda = point.lambda;
  mode.pairings = inner_products(phi, psi, kappa, mu);
  mode.constant = asymptotic_constant(phi, psi, kappa, mu);
  return mode;
}

bool is_conjugate(Complex x, Complex y) {
  return std::abs(x - std::conj(y)) <= 1e-8 * std::max(1.0, std::abs(x));
}

}  // namespace

AsymptoticModel asymptotic_model(const WeightScheme& s, const std::vector<spectral::SpectralPoint>& points,
                                 std::size_t top_k, double floor) {
  if (!is_kernel_symmetric(s)) {
    throw AdjointUnavailableError(
        "asymptotic constants need wt(w) = wt(reversed(w)) for every window; this scheme only supports "
        "spectrum and exact counts");
  }
  const auto t = spectral::build_transfer(s);
  const PiecewiseFn kappa = initial_weights(s);
  const PiecewiseFn mu = final_weights(s);

  AsymptoticModel model;
  model.m = s.m();
  std::size_t count = std::min(top_k, points.size());
  // keep conjugate pairs together
  if (count > 0 && count < points.size() && std::abs(points[count - 1].lambda.imag()) > 0 &&
      is_conjugate(points[count - 1].lambda, points[count].lambda)) {
    ++count;
  }

  std::vector<bool> done(count, false);
  for (std::size_t i = 0; i < count; ++i) {
    if (done[i]) continue;
    done[i] = true;
    if (!points[i].simple) {
      std::ostringstream msg;
      msg << "asymptotic_model: eigenvalue " << points[i].lambda
          << " fails the simplicity certificate; its constant is not computed";
      throw std::domain_error(msg.str());
    }
    Mode mode = mode_for(t, points[i], kappa, mu);
    if (mode.lambda.imag() == 0.0) {
      mode.imag_residue = std::abs(mode.constant.imag());
      mode.constant = Complex(mode.constant.real(), 0.0);
      model.modes.push_back(mode);
      continue;
    }
    std::size_t partner = count;
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!done[j] && is_conjugate(points[i].lambda, points[j].lambda)) {
        partner = j;
        break;
      }
    }
    if (partner == count) {
      model.modes.push_back(mode);
      continue;
    }
    done[partner] = true;
    Mode other = mode_for(t, points[partner], kappa, mu);
    const Complex averaged = 0.5 * (mode.constant + std::conj(other.constant));
    const double residue = std::abs(mode.constant - std::conj(other.constant));
    mode.constant = averaged;
    mode.imag_residue = residue;
    other.lambda = std::conj(mode.lambda);
    other.constant = std::conj(averaged);
    other.imag_residue = residue;
    model.modes.push_back(mode);
    model.modes.push_back(other);
  }
  model.r_hat = count < points.size() ? std::abs(points[count].lambda) : floor;
  return model;
}

Prediction predict_alpha(const AsymptoticModel& model, int n) {
  if (n < model.m) throw std::invalid_argument("predict_alpha: n must be at least m");
  Complex sum(0.0, 0.0);
  for (const auto& mode : model.modes) sum += mode.constant * std::pow(mode.lambda, n - model.m);
  return {sum.real(), std::abs(sum.imag()), model.r_hat};
}

}  // namespace descent::expfun
