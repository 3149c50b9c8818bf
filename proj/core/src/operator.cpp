#include "descent/expfun.hpp"

namespace descent::expfun {

PiecewiseFn apply_operator(const spectral::TransferPair& t, const PiecewiseFn& f) {
  if (f.variable != Variable::first) throw std::invalid_argument("apply_operator: input must be in x_1");
  const Eigen::Index d = t.A.rows();
  if (static_cast<Eigen::Index>(f.pieces.size()) != d) {
    throw std::invalid_argument("apply_operator: piece count does not match the transfer matrices");
  }
  std::vector<ExpPoly> below;  // int_0^x f
  std::vector<ExpPoly> above;  // int_x^1 f
  for (const auto& p : f.pieces) {
    ExpPoly g = p.antiderivative();
    above.push_back(ExpPoly::constant(g.at_one()) - g);
    below.push_back(std::move(g));
  }
  PiecewiseFn out{f.m, Variable::first, std::vector<ExpPoly>(static_cast<std::size_t>(d))};
  for (Eigen::Index row = 0; row < d; ++row) {
    for (Eigen::Index col = 0; col < d; ++col) {
      if (t.A(row, col) != Complex(0.0, 0.0)) out.pieces[row] += t.A(row, col) * below[col];
      if (t.B(row, col) != Complex(0.0, 0.0)) out.pieces[row] += t.B(row, col) * above[col];
    }
  }
  return out;
}

PiecewisePoly apply_operator(const spectral::ExactTransfer& t, const PiecewisePoly& f) {
  if (f.variable != Variable::first) throw std::invalid_argument("apply_operator: input must be in x_1");
  if (f.pieces.size() != t.dimension) {
    throw std::invalid_argument("apply_operator: piece count does not match the transfer matrices");
  }
  std::vector<RationalPoly> below;
  std::vector<RationalPoly> above;
  for (const auto& p : f.pieces) {
    RationalPoly g = p.antiderivative();
    above.push_back(RationalPoly::constant(g.at_one()) - g);
    below.push_back(std::move(g));
  }
  PiecewisePoly out{f.m, Variable::first, std::vector<RationalPoly>(t.dimension)};
  for (const auto& e : t.a) out.pieces[e.row] += below[e.col] * e.weight;
  for (const auto& e : t.b) out.pieces[e.row] += above[e.col] * e.weight;
  return out;
}

exact::WeightedCount alpha_by_operator_iteration(const WeightScheme& s, int n, exact::EndFilter filter) {
  if (n < 0) throw std::invalid_argument("alpha_by_operator_iteration: n must be non-negative");
  if (filter.active() && n < 2) {
    throw std::invalid_argument("alpha_by_operator_iteration: an end filter needs n >= 2");
  }
  BigInt factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  if (n == 0) return {0, Rational(1)};

  if (n < s.m()) {
    // no weights apply: count permutations through the polytope volumes
    const RationalPoly one = RationalPoly::constant(Rational(1));
    Rational volume(0);
    for (const auto& u : all_words(static_cast<std::size_t>(n - 1))) {
      if (filter.accepts(u)) volume += polytope_integral(u, one, one);
    }
    return {n, volume * Rational(factorial)};
  }

  const WeightScheme restricted = filter.active() ? restrict_ends(s, filter.start, filter.end) : s;
  const auto t = spectral::exact_transfer(restricted);
  PiecewisePoly f = initial_weights_exact(restricted);
  for (int k = 0; k < n - s.m(); ++k) f = apply_operator(t, f);
  Rational value = integrate_product(f, final_weights_exact(restricted)) * Rational(factorial);
  value.canonicalize();
  return {n, value};
}

}  // namespace descent::expfun
