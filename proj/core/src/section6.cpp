// Closed forms for the m = 2 scheme wt(aa) = 0, wt(bb) = 2, wt(ab) = wt(ba) = 1.

#include <array>
#include <stdexcept>
#include <string>

#include "descent/exact.hpp"

namespace descent::exact {

BigInt derangements(int n) {
  if (n < 0) throw std::invalid_argument("derangements: negative n");
  BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
  if (n == 0) return prev2;
  for (int k = 2; k <= n; ++k) {
    BigInt next = BigInt(k - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

Section6Values section6_recursion(int n) {
  if (n < 2) throw std::invalid_argument("section6_recursion: n must be >= 2");
  Section6Values v{1, 0, 1, 2};
  for (int k = 3; k <= n; ++k) {
    const int sign = k % 2 == 0 ? 1 : -1;
    v.aa = k * v.aa + 1 + 4 * sign;
    v.ab = k * v.ab - 2 * sign;
    v.bb = k * v.bb + sign;
    v.total = k * v.total + 1 + sign;
  }
  return v;
}

namespace {

// c = sum_k coef(k) / k! for each sequence, coef bounded by 5 in modulus.
int series_coefficient(Sequence which, int k) {
  const int one = 1;
  const int zero_pow = k == 0 ? 1 : 0;
  const int alt = k % 2 == 0 ? 1 : -1;
  switch (which) {
    case Sequence::aa: return one - 4 * zero_pow + 4 * alt;
    case Sequence::ab: return zero_pow - 2 * alt;
    case Sequence::bb: return alt;
    case Sequence::total: return one - 2 * zero_pow + alt;
  }
  return 0;
}

const char* sequence_name(Sequence which) {
  switch (which) {
    case Sequence::aa: return "aa";
    case Sequence::ab: return "ab";
    case Sequence::bb: return "bb";
    case Sequence::total: return "total";
  }
  return "?";
}

BigInt floor_of(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

int nearest_integer_threshold(Sequence which) {
  switch (which) {
    case Sequence::aa: return 8;
    case Sequence::ab: return 3;
    case Sequence::bb: return 2;
    case Sequence::total: return 4;
  }
  return 0;
}

BigInt nearest_integer_formula(int n, Sequence which) {
  const int threshold = nearest_integer_threshold(which);
  if (n < threshold) {
    throw std::domain_error(std::string("nearest-integer formula for ") + sequence_name(which) +
                            " holds only for n >= " + std::to_string(threshold));
  }
  // n! * c = sum_{k<=K} coef_k n!/k! + tail, |tail| <= 10 n!/(K+1)!.
  for (int extra = 8;; extra *= 2) {
    const int K = n + extra;
    Rational partial(0);
    Rational ratio(1);  // n!/k!, starting at k = n and walking both ways
    BigInt factor = 1;  // n!/k! for k <= n
    for (int k = n; k >= 0; --k) {
      partial += Rational(series_coefficient(which, k)) * Rational(factor);
      factor *= k;
    }
    for (int k = n + 1; k <= K; ++k) {
      ratio /= k;
      partial += Rational(series_coefficient(which, k)) * ratio;
    }
    const Rational tail_bound = Rational(10) * ratio / (K + 1);
    const BigInt rounded = floor_of(partial + Rational(1, 2));
    Rational gap = partial - Rational(rounded);
    if (gap < 0) gap = -gap;
    if (Rational(1, 2) - gap > tail_bound) return rounded;
  }
}

namespace {

using Series = std::vector<Rational>;  // ordinary power-series coefficients

Series exp_series(int order, int sign) {
  Series s(static_cast<std::size_t>(order) + 1);
  Rational term(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term *= Rational(sign, k);
    s[static_cast<std::size_t>(k)] = term;
  }
  return s;
}

Series geometric(int order) { return Series(static_cast<std::size_t>(order) + 1, Rational(1)); }

Series poly(int order, std::initializer_list<Rational> coeffs) {
  Series s(static_cast<std::size_t>(order) + 1, Rational(0));
  std::size_t k = 0;
  for (const auto& c : coeffs) {
    if (k < s.size()) s[k] = c;
    ++k;
  }
  return s;
}

Series operator+(Series a, const Series& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
Series operator-(Series a, const Series& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
Series operator*(const Rational& c, Series a) {
  for (auto& x : a) x *= c;
  return a;
}
Series operator*(const Series& a, const Series& b) {
  Series out(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}
Series integrate(const Series& a) {
  Series out(a.size(), Rational(0));
  for (std::size_t k = 1; k < a.size(); ++k) out[k] = a[k - 1] / Rational(static_cast<long>(k));
  return out;
}

struct ClosedForms {
  Series aa, ab, bb, total;
};

ClosedForms closed_forms(int order) {
  const Series ez = exp_series(order, 1);
  const Series emz = exp_series(order, -1);
  const Series inv = geometric(order);
  const Series one = poly(order, {1});
  ClosedForms f;
  f.aa = (ez - Rational(4) * one + Rational(4) * emz) * inv - one + poly(order, {0, 2});
  f.ab = (one - Rational(2) * emz) * inv + one - poly(order, {0, 1});
  f.bb = emz * inv - one;
  f.total = (ez - Rational(2) * one + emz) * inv;
  return f;
}

std::vector<Rational> egf_coefficients(const Series& s) {
  std::vector<Rational> out(s.size());
  BigInt fact = 1;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    out[k] = s[k] * Rational(fact);
    out[k].canonicalize();
  }
  return out;
}

}  // namespace

GenfunTable genfun_coeffs(int order) {
  if (order < 2) throw std::invalid_argument("genfun_coeffs: order must be >= 2");
  const ClosedForms f = closed_forms(order);
  return {egf_coefficients(f.aa), egf_coefficients(f.ab), egf_coefficients(f.bb),
          egf_coefficients(f.total)};
}

bool verify_genfun_equation(int order, int double_descent_weight) {
  if (order < 3) throw std::invalid_argument("verify_genfun_equation: order must be >= 3");
  const ClosedForms f = closed_forms(order);
  // F[x][y], index 0 = a, 1 = b; F_ba = F_ab by reverse-complement symmetry.
  const std::array<std::array<const Series*, 2>, 2> F{{{&f.aa, &f.ab}, {&f.ab, &f.bb}}};
  const Series w = poly(order, {0, 1});
  const Rational k(double_descent_weight);

  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const Series left = *F[x][0] + k * *F[x][1];  // F_xa + 2 F_xb
      const Series& right = *F[1][y];               // F_by
      Series rhs = integrate(left * right);
      if (x == y) rhs[2] += Rational(1, 2);
      if (x == 1 && y == 0) rhs[3] += Rational(1, 3);  // 2 z^3/3!
      if (x == 0) rhs = rhs + integrate(right);
      if (x == 1) rhs = rhs + integrate(w * right);
      if (y == 1) rhs = rhs + integrate(left);
      if (y == 0) rhs = rhs + integrate(left * w);
      if (rhs != *F[x][y]) return false;
    }
  }
  return true;
}

BigInt count_barred(const Permutation& pi) {
  const std::size_t n = pi.size();
  if (n == 0) return 1;
  // ways[c] = sum over compositions of c of prod (c_i - 1)
  std::vector<BigInt> ways(n + 1, 0);
  ways[0] = 1;
  for (std::size_t c = 1; c <= n; ++c) {
    for (std::size_t part = 1; part <= c; ++part) {
      ways[c] += ways[c - part] * static_cast<unsigned long>(part - 1);
    }
  }

  BigInt total = 1;
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin;
    while (end + 1 < n && pi[end] > pi[end + 1]) ++end;
    const std::size_t c = end - begin + 1;
    if (c == 1) {
      // A lone entry at either end of pi is left unbarred; an interior one
      // sits in a double ascent.
      if (begin != 0 && end != n - 1) return 0;
    } else {
      total *= ways[c];
    }
    begin = end + 1;
  }
  return total;
}

}  // namespace descent::exact
