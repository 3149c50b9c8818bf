#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "descent/exact.hpp"
#include "descent/presets.hpp"
#include "support.hpp"

using namespace descent;
using namespace descent::exact;
using testing_support::factorial;

namespace {

const WeightScheme& sec6() { return preset("sec6").scheme; }

Rational dp(const WeightScheme& s, int n, EndFilter f = {}) { return dp_alpha(s, n, f).value; }

EndFilter ends(Letter x, Letter y) { return EndFilter{x, y}; }

int double_descents(const Permutation& pi) {
  int count = 0;
  for (std::size_t i = 0; i + 2 < pi.size(); ++i) count += (pi[i] > pi[i + 1] && pi[i + 1] > pi[i + 2]) ? 1 : 0;
  return count;
}

bool has_double_ascent(const Permutation& pi) {
  for (std::size_t i = 0; i + 2 < pi.size(); ++i) {
    if (pi[i] < pi[i + 1] && pi[i + 1] < pi[i + 2]) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("permutation weights") {
  CHECK(wt_of_permutation(sec6(), Permutation::parse("321")) == 2);
  CHECK(wt_of_permutation(sec6(), Permutation::parse("123")) == 0);
  CHECK(wt_of_permutation(preset("all-ones").scheme, Permutation::parse("31524")) == 1);
  CHECK_THROWS_AS(wt_of_permutation(preset("sec5-1").scheme, Permutation::parse("21")), std::invalid_argument);
}

TEST_CASE("brute force examples") {
  CHECK(brute_force_alpha(preset("sec5-1").scheme, 4).value == 22);
  CHECK(brute_force_alpha(sec6(), 3).value == 6);
  CHECK(brute_force_alpha(preset("no-peaks").scheme, 4).value == 8);
  CHECK_THROWS_AS(brute_force_alpha(sec6(), 11), std::invalid_argument);
  try {
    brute_force_alpha(sec6(), 11);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("dp_alpha") != std::string::npos);
  }
}

TEST_CASE("dp examples") {
  CHECK(dp(sec6(), 3, ends(Letter::b, Letter::b)) == 2);
  CHECK(dp(sec6(), 4) == 26);
  for (int n = 1; n <= 15; ++n) CHECK(dp(preset("all-ones").scheme, n) == Rational(factorial(n)));
}

TEST_CASE("short permutations") {
  // n = m: only wt1 * wt2 applies
  WeightScheme s(3);
  s.set_wt1(ABWord::parse("ab"), Rational(5));
  s.set_wt2(ABWord::parse("ab"), Rational(1, 2));
  s.set_wt(ABWord::parse("aba"), Rational(0));
  CHECK(dp(s, 3) == brute_force_alpha(s, 3).value);
  CHECK(dp(s, 3) == Rational(6 - 2) + Rational(2) * Rational(5, 2));
  // n < m: unweighted count
  CHECK(dp(s, 2) == 2);
  CHECK(dp(s, 1) == 1);
  CHECK(dp(s, 0) == 1);
  CHECK(brute_force_alpha(s, 2).value == 2);
  CHECK(dp(sec6(), 2) == 2);
}

TEST_CASE("brute force equals dp on presets and random schemes") {
  for (const auto& p : presets()) {
    for (int n = 1; n <= 8; ++n) {
      INFO(p.name << " n=" << n);
      CHECK(brute_force_alpha(p.scheme, n).value == dp(p.scheme, n));
    }
  }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + trial % 3;
    const WeightScheme s = testing_support::random_scheme(rng, m);
    for (int n = 1; n <= 7; ++n) {
      INFO("trial " << trial << " n=" << n);
      CHECK(brute_force_alpha(s, n).value == dp(s, n));
    }
  }
}

TEST_CASE("refinements") {
  std::mt19937_64 rng(9);
  for (int m = 2; m <= 3; ++m) {
    const WeightScheme s = testing_support::random_scheme(rng, m);
    for (int n = 2; n <= 7; ++n) {
      Rational sum = 0;
      for (Letter x : {Letter::a, Letter::b}) {
        for (Letter y : {Letter::a, Letter::b}) {
          const Rational v = dp(s, n, ends(x, y));
          CHECK(v == brute_force_alpha(s, n, ends(x, y)).value);
          sum += v;
        }
      }
      CHECK(sum == dp(s, n));
      CHECK(dp(s, n, EndFilter{Letter::a, std::nullopt}) + dp(s, n, EndFilter{Letter::b, std::nullopt}) == dp(s, n));
    }
  }
  CHECK_THROWS_AS(dp_alpha(sec6(), 1, ends(Letter::a, Letter::a)), std::invalid_argument);
}

TEST_CASE("symmetric schemes have equal mixed refinements") {
  std::mt19937_64 rng(17);
  std::vector<WeightScheme> schemes{sec6(), preset("sec5-1").scheme, preset("sec5-2").scheme};
  schemes.push_back(testing_support::random_symmetric_scheme(rng, 3));
  for (const auto& s : schemes) {
    REQUIRE(is_symmetric(s));
    for (int n = 2; n <= 12; ++n) CHECK(dp(s, n, ends(Letter::a, Letter::b)) == dp(s, n, ends(Letter::b, Letter::a)));
  }
}

TEST_CASE("classical examples") {
  for (int n = 0; n <= 14; ++n) CHECK(dp(preset("no-descents").scheme, n) == 1);
  for (int n = 1; n <= 14; ++n) CHECK(dp(preset("no-peaks").scheme, n) == Rational(BigInt(1) << (n - 1)));
  const auto euler = testing_support::euler_zigzag(12);
  for (int n = 2; n <= 12; ++n) CHECK(dp(preset("alternating").scheme, n) == Rational(2 * euler[n]));
}

TEST_CASE("derangements") {
  CHECK(derangements(0) == 1);
  CHECK(derangements(1) == 0);
  CHECK(derangements(2) == 1);
  CHECK(derangements(4) == 9);
  for (int n = 2; n <= 14; ++n) CHECK(Rational(derangements(n)) == dp(sec6(), n, ends(Letter::b, Letter::b)));
}

TEST_CASE("recursions of the wt(aa) = 0, wt(bb) = 2 sequences") {
  const auto two = section6_recursion(2);
  CHECK(two.aa == 1);
  CHECK(two.ab == 0);
  CHECK(two.bb == 1);
  CHECK(two.total == 2);
  CHECK(section6_recursion(3).bb == 2);
  CHECK(section6_recursion(4).total == 26);
  for (int n = 2; n <= 20; ++n) {
    const auto r = section6_recursion(n);
    CHECK(Rational(r.aa) == dp(sec6(), n, ends(Letter::a, Letter::a)));
    CHECK(Rational(r.ab) == dp(sec6(), n, ends(Letter::a, Letter::b)));
    CHECK(Rational(r.bb) == dp(sec6(), n, ends(Letter::b, Letter::b)));
    CHECK(Rational(r.total) == dp(sec6(), n));
  }
  CHECK_THROWS_AS(section6_recursion(1), std::invalid_argument);
}

TEST_CASE("nearest integer formulas") {
  CHECK(nearest_integer_formula(4, Sequence::bb) == 9);
  CHECK(nearest_integer_formula(4, Sequence::total) == 26);
  CHECK(nearest_integer_threshold(Sequence::aa) == 8);
  CHECK(nearest_integer_threshold(Sequence::ab) == 3);
  CHECK(nearest_integer_threshold(Sequence::bb) == 2);
  CHECK(nearest_integer_threshold(Sequence::total) == 4);
  CHECK_THROWS_AS(nearest_integer_formula(7, Sequence::aa), std::domain_error);
  for (Sequence which : {Sequence::aa, Sequence::ab, Sequence::bb, Sequence::total}) {
    for (int n = nearest_integer_threshold(which); n <= 20; ++n) {
      const auto r = section6_recursion(n);
      const BigInt expected = which == Sequence::aa ? r.aa : which == Sequence::ab ? r.ab : which == Sequence::bb ? r.bb : r.total;
      CHECK(nearest_integer_formula(n, which) == expected);
    }
  }
}

TEST_CASE("nearest integer thresholds are sharp") {
  const double e = std::exp(1.0);
  const double c_aa = e - 4 + 4 / e;
  const double c_ab = 1 - 2 / e;
  const double c_total = e - 2 + 1 / e;
  auto nearest = [](double c, int n) { return BigInt(static_cast<long>(std::llround(c * factorial(n).get_d()))); };
  CHECK(nearest(c_aa, 7) != section6_recursion(7).aa);
  CHECK(nearest(c_ab, 2) != section6_recursion(2).ab);
  CHECK(nearest(c_total, 3) != section6_recursion(3).total);
}

TEST_CASE("generating function coefficients") {
  const auto g = genfun_coeffs(20);
  REQUIRE(g.total.size() == 21);
  CHECK(g.total[2] == 2);
  for (int n = 2; n <= 20; ++n) {
    CHECK(g.aa[n] == dp(sec6(), n, ends(Letter::a, Letter::a)));
    CHECK(g.ab[n] == dp(sec6(), n, ends(Letter::a, Letter::b)));
    CHECK(g.bb[n] == dp(sec6(), n, ends(Letter::b, Letter::b)));
    CHECK(g.total[n] == dp(sec6(), n));
  }
  for (int n = 2; n <= 12; ++n) CHECK(g.bb[n] == Rational(derangements(n)));
}

TEST_CASE("generating function equation") {
  CHECK(verify_genfun_equation(3));
  CHECK(verify_genfun_equation(10));
  CHECK(verify_genfun_equation(12));
  CHECK_FALSE(verify_genfun_equation(10, 3));
}

TEST_CASE("barred permutations") {
  CHECK(count_barred(Permutation::parse("321")) == 2);
  CHECK(count_barred(Permutation::parse("123")) == 0);
  CHECK(count_barred(Permutation::parse("3214")) == 2);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
      const Permutation pi(v);
      if (has_double_ascent(pi)) {
        CHECK(count_barred(pi) == 0);
      } else {
        REQUIRE(count_barred(pi) == BigInt(1) << double_descents(pi));
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

}  // TEST_SUITE
