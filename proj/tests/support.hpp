#pragma once

// Independent oracles shared by the unit and acceptance tests.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "descent/words.hpp"

namespace testing_support {

using descent::BigInt;
using descent::Rational;

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Euler zigzag numbers E_0..E_n from the boustrophedon triangle.
inline std::vector<BigInt> euler_zigzag(int n) {
  std::vector<BigInt> e{1};
  std::vector<BigInt> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> next(static_cast<std::size_t>(k) + 1);
    next[0] = 0;
    for (int j = 1; j <= k; ++j) next[j] = next[j - 1] + row[static_cast<std::size_t>(k - j)];
    e.push_back(next[static_cast<std::size_t>(k)]);
    row = std::move(next);
  }
  return e;
}

/// Weights p/q with p in [0, 4], q in [1, 3] for every wt, wt1, wt2 entry.
inline descent::WeightScheme random_scheme(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> num(0, 4);
  std::uniform_int_distribution<int> den(1, 3);
  auto draw = [&] {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  descent::WeightScheme s(m);
  for (const auto& w : descent::all_words(static_cast<std::size_t>(m))) s.set_wt(w, draw());
  for (const auto& u : descent::all_words(static_cast<std::size_t>(m - 1))) {
    s.set_wt1(u, draw());
    s.set_wt2(u, draw());
  }
  return s;
}

/// Same as random_scheme but with wt(w) = wt(reversed(w)) and wt2 the
/// reversal image of wt1.
inline descent::WeightScheme random_symmetric_scheme(std::mt19937_64& rng, int m) {
  descent::WeightScheme s = random_scheme(rng, m);
  for (const auto& w : descent::all_words(static_cast<std::size_t>(m))) {
    const auto r = descent::reversed(w);
    if (r < w) s.set_wt(w, s.wt(r));
  }
  for (const auto& u : descent::all_words(static_cast<std::size_t>(m - 1))) {
    s.set_wt2(descent::reversed(u), s.wt1(u));
  }
  return s;
}

/// The four-exponential right-hand sides whose largest positive root is the
/// leading eigenvalue of the {aaa, bbb} and {aba, bab} schemes; both equal -8
/// at that root.
inline std::complex<double> four_exponential_aaa_bbb(double lambda) {
  using C = std::complex<double>;
  const double tau = std::sqrt((1 + std::sqrt(5.0)) / 2);
  const double sigma = std::sqrt((-1 + std::sqrt(5.0)) / 2);
  const double r5 = std::sqrt(5.0);
  const C i(0, 1);
  return (3.0 + i + r5 * (tau + sigma * i)) * std::exp((sigma + tau * i) / lambda) +
         (3.0 - i + r5 * (tau - sigma * i)) * std::exp((sigma - tau * i) / lambda) +
         (3.0 - i + r5 * (-tau + sigma * i)) * std::exp((-sigma + tau * i) / lambda) +
         (3.0 + i + r5 * (-tau - sigma * i)) * std::exp((-sigma - tau * i) / lambda);
}

inline std::complex<double> four_exponential_aba_bab(double lambda) {
  using C = std::complex<double>;
  const double tau = std::sqrt((1 + std::sqrt(5.0)) / 2);
  const double sigma = std::sqrt((-1 + std::sqrt(5.0)) / 2);
  const double r5 = std::sqrt(5.0);
  const C i(0, 1);
  return (3.0 - i + r5 * (-tau + sigma * i)) * std::exp((tau + sigma * i) / lambda) +
         (3.0 + i + r5 * (-tau - sigma * i)) * std::exp((tau - sigma * i) / lambda) +
         (3.0 + i + r5 * (tau + sigma * i)) * std::exp((-tau + sigma * i) / lambda) +
         (3.0 - i + r5 * (tau - sigma * i)) * std::exp((-tau - sigma * i) / lambda);
}

/// 20-point Gauss-Legendre rule on [lo, hi].
inline double gauss_legendre(const std::function<double(double)>& f, double lo, double hi) {
  static const double x[] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
                             0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                             0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                             0.9931285991850949};
  static const double w[] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
                             0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                             0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                             0.0176140071391521};
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0;
  for (int k = 0; k < 10; ++k) sum += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
  return sum * half;
}

}  // namespace testing_support
