#pragma once

// Exact weighted permutation sums alpha_n = sum over S_n of Wt(pi), by brute
// force and by an insertion dynamic program, plus the closed forms known for
// the m = 2 scheme wt(aa) = 0, wt(bb) = 2.
//
// Conventions for short permutations: when n = m the window product is empty
// and Wt(pi) = wt1(u) * wt2(u) for u = u(pi); when n < m no weight applies and
// alpha_n counts permutations.

#include <array>
#include <optional>
#include <vector>

#include "descent/words.hpp"

namespace descent::exact {

struct WeightedCount {
  int n = 0;
  Rational value;
};

/// Refinement by the first and last letter of the descent word. Either side
/// may be left open. A non-empty filter requires n >= 2.
struct EndFilter {
  std::optional<Letter> start;
  std::optional<Letter> end;

  bool active() const noexcept { return start.has_value() || end.has_value(); }
  bool accepts(const ABWord& u) const;
};

/// Wt of a descent word of length >= m-1.
Rational word_weight(const WeightScheme& s, const ABWord& u);

/// Wt(pi) = Wt(u(pi)). Throws std::invalid_argument when n < m.
Rational wt_of_permutation(const WeightScheme& s, const Permutation& pi);

inline constexpr int kDefaultBruteForceCap = 10;

/// Sums Wt over all n! permutations. Refuses n above `cap`.
WeightedCount brute_force_alpha(const WeightScheme& s, int n, EndFilter filter = {},
                                int cap = kDefaultBruteForceCap);

/// Same quantity by inserting one element at a time and tracking the rank of
/// the last element together with the last m-1 descent letters. Uses integer
/// arithmetic when every weight is an integer.
WeightedCount dp_alpha(const WeightScheme& s, int n, EndFilter filter = {});

/// D_n by D_n = (n-1)(D_{n-1} + D_{n-2}).
BigInt derangements(int n);

/// Sequences of the m = 2 scheme wt(aa) = 0, wt(bb) = 2 (wt1 = wt2 = 1).
enum class Sequence { aa, ab, bb, total };

struct Section6Values {
  BigInt aa, ab, bb, total;
};

/// alpha_n(a,a), alpha_n(a,b), alpha_n(b,b), alpha_n from the first-order
/// recursions seeded at n = 2 by the Kronecker delta. Requires n >= 2.
Section6Values section6_recursion(int n);

/// Smallest n for which alpha_n of the sequence is the nearest integer to
/// c * n!.
int nearest_integer_threshold(Sequence which);

/// Nearest integer to c * n! with c in {e-4+4/e, 1-2/e, 1/e, e-2+1/e}.
/// Evaluated with exact rationals: the series for c is summed far enough past
/// n that the remainder provably cannot move the rounding. Throws
/// std::domain_error below the threshold.
BigInt nearest_integer_formula(int n, Sequence which);

/// Coefficients of z^n/n! for n = 0..N of F_aa, F_ab, F_bb and F, expanded
/// from their closed forms in 1/(1-z), e^z and e^-z.
struct GenfunTable {
  std::vector<Rational> aa, ab, bb, total;
};
GenfunTable genfun_coeffs(int order);

/// Checks the convolution equation for F_xy (all four x, y) to order N
/// using the closed-form series. `double_descent_weight` is the factor 2 in
/// front of F_xb; any other value should make the identity fail.
bool verify_genfun_equation(int order, int double_descent_weight = 2);

/// Number of barred permutations obtainable from pi: each maximal descent run
/// of c >= 2 entries is split into consecutive descent runs with one bar point
/// per run, summed over compositions (c_1, ..., c_k) of c as prod (c_i - 1).
/// A single-entry run at either end of pi stays unbarred (factor 1); an
/// interior one is a double ascent and admits no barring (result 0).
BigInt count_barred(const Permutation& pi);

}  // namespace descent::exact
