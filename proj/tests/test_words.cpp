#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "descent/exact.hpp"
#include "descent/presets.hpp"
#include "descent/words.hpp"
#include "support.hpp"

using namespace descent;

namespace {

ABWord w(const char* s) { return ABWord::parse(s); }
Permutation p(const char* s) { return Permutation::parse(s); }

}  // namespace

TEST_SUITE("words") {

TEST_CASE("descent words of small permutations") {
  CHECK(descent_word(p("123")) == w("aa"));
  CHECK(descent_word(p("213")) == w("ba"));
  CHECK(descent_word(p("2413")) == w("aba"));
  CHECK(descent_word(p("1")).empty());
  CHECK_THROWS_AS(descent_word(Permutation{}), std::invalid_argument);
}

TEST_CASE("permutation parsing rejects non-bijections") {
  CHECK(p("3 1 2") == p("312"));
  CHECK(p("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_AS(p("113"), std::invalid_argument);
  CHECK_THROWS_AS(p("124"), std::invalid_argument);
}

TEST_CASE("standardize replaces values by ranks") {
  const double x1[] = {0.3, 0.1, 0.9};
  const double x2[] = {1, 2, 3, 4};
  const double x3[] = {5, 1, 4, 2};
  const double dup[] = {0.5, 0.2, 0.5};
  CHECK(standardize(x1) == p("213"));
  CHECK(standardize(x2) == p("1234"));
  CHECK(standardize(x3) == p("4132"));
  CHECK_THROWS_AS(standardize(dup), std::invalid_argument);
}

TEST_CASE("standardize keeps the comparison pattern") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(2 + trial % 9);
    for (auto& v : x) v = unif(rng);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) letters.push_back(x[i] < x[i + 1] ? Letter::a : Letter::b);
    CHECK(descent_word(standardize(x)) == ABWord(letters));
  }
}

TEST_CASE("word index is lexicographic with a before b") {
  const auto words = all_words(2);
  REQUIRE(words.size() == 4);
  CHECK(words[0] == w("aa"));
  CHECK(words[1] == w("ab"));
  CHECK(words[2] == w("ba"));
  CHECK(words[3] == w("bb"));
  CHECK(w("bab").index() == 5);
  CHECK(ABWord::from_index(5, 3) == w("bab"));
  CHECK(all_words(0).size() == 1);
  CHECK_THROWS_AS(w("abc"), std::invalid_argument);
}

TEST_CASE("reverse_complement") {
  CHECK(reverse_complement(w("aab")) == w("abb"));
  CHECK(reverse_complement(w("ab")) == w("ab"));
  CHECK(reverse_complement(w("bbb")) == w("aaa"));
  for (std::size_t len = 0; len <= 12; ++len) {
    for (const auto& u : all_words(len)) REQUIRE(reverse_complement(reverse_complement(u)) == u);
  }
}

TEST_CASE("reverse_complement is the word of the reversed permutation") {
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  do {
    std::vector<int> r(v.rbegin(), v.rend());
    CHECK(descent_word(Permutation(r)) == reverse_complement(descent_word(Permutation(v))));
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("reversal is the word of pi -> n+1-pi_n, ..., n+1-pi_1") {
  std::vector<int> v{1, 2, 3, 4, 5, 6};
  const int n = static_cast<int>(v.size());
  do {
    std::vector<int> image;
    for (auto it = v.rbegin(); it != v.rend(); ++it) image.push_back(n + 1 - *it);
    CHECK(descent_word(Permutation(image)) == reversed(descent_word(Permutation(v))));
  } while (std::next_permutation(v.begin(), v.end()));
  for (std::size_t len = 0; len <= 10; ++len) {
    for (const auto& u : all_words(len)) REQUIRE(reversed(reversed(u)) == u);
  }
}

TEST_CASE("symmetry of weight schemes") {
  CHECK(is_symmetric(preset("sec6").scheme));
  CHECK(is_symmetric(preset("sec5-1").scheme));
  CHECK(is_symmetric(preset("sec5-2").scheme));
  CHECK(is_symmetric(preset("alternating").scheme));

  // aaa is fixed by the symmetry, so forbidding it alone keeps Wt invariant
  const ABWord aaa[] = {w("aaa")};
  CHECK(is_symmetric(avoiding(3, aaa)));
  const ABWord aab[] = {w("aab")};
  CHECK_FALSE(is_symmetric(avoiding(3, aab)));
  CHECK_FALSE(is_kernel_symmetric(avoiding(3, aab)));

  WeightScheme s = preset("sec6").scheme;
  s.set_wt1(w("a"), Rational(3));
  CHECK(is_kernel_symmetric(s));
  CHECK_FALSE(is_symmetric(s));
  s.set_wt2(w("a"), Rational(3));
  CHECK(is_symmetric(s));
}

TEST_CASE("symmetric schemes give invariant permutation weights") {
  std::mt19937_64 rng(5);
  for (int m = 1; m <= 3; ++m) {
    const WeightScheme s = testing_support::random_symmetric_scheme(rng, m);
    REQUIRE(is_symmetric(s));
    std::vector<int> v{1, 2, 3, 4, 5};
    do {
      std::vector<int> image;
      for (auto it = v.rbegin(); it != v.rend(); ++it) image.push_back(6 - *it);
      CHECK(exact::wt_of_permutation(s, Permutation(v)) == exact::wt_of_permutation(s, Permutation(image)));
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("pattern sets") {
  const ABWord alt[] = {w("aba"), w("bab")};
  std::set<Permutation> expected;
  for (const char* s : {"1324", "1423", "2314", "2413", "3412", "2143", "3142", "3241", "4132", "4231"}) {
    expected.insert(p(s));
  }
  const auto got = pattern_set(alt);
  CHECK(std::set<Permutation>(got.begin(), got.end()) == expected);
  CHECK(got.size() == 10);

  const ABWord aa[] = {w("aa")};
  CHECK(pattern_set(aa) == std::vector<Permutation>{p("123")});

  const ABWord ends[] = {w("aaa"), w("bbb")};
  const auto mono = pattern_set(ends);
  CHECK(std::set<Permutation>(mono.begin(), mono.end()) == std::set<Permutation>{p("1234"), p("4321")});

  const ABWord mixed[] = {w("ab"), w("abb")};
  CHECK_THROWS_AS(pattern_set(mixed), std::invalid_argument);
}

TEST_CASE("pattern set sizes match descent-word class sizes") {
  for (int m = 1; m <= 4; ++m) {
    // beta(u) by brute force over S_{m+1}
    std::vector<long> beta(std::size_t{1} << m, 0);
    std::vector<int> v(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) v[i] = i + 1;
    do {
      beta[descent_word(Permutation(v)).index()]++;
    } while (std::next_permutation(v.begin(), v.end()));

    std::mt19937_64 rng(static_cast<unsigned>(m));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<ABWord> subset;
      long expected = 0;
      for (const auto& u : all_words(static_cast<std::size_t>(m))) {
        if (rng() % 2) {
          subset.push_back(u);
          expected += beta[u.index()];
        }
      }
      CHECK(static_cast<long>(pattern_set(subset).size()) == expected);
    }
  }
}

TEST_CASE("weight scheme construction") {
  CHECK_THROWS_AS(WeightScheme(0), std::invalid_argument);
  CHECK_THROWS_AS(WeightScheme(WeightScheme::kMaxWindow + 1), std::invalid_argument);
  WeightScheme s(3);
  CHECK(s.window_count() == 8);
  CHECK(s.state_count() == 4);
  CHECK(s.wt(w("aba")) == 1);
  CHECK_THROWS_AS(s.set_wt(w("ab"), Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(s.set_wt1(w("aba"), Rational(0)), std::invalid_argument);
}

TEST_CASE("restrict_ends masks the boundary weights") {
  const WeightScheme s = restrict_ends(preset("sec5-1").scheme, Letter::a, Letter::b);
  CHECK(s.wt1(w("ab")) == 1);
  CHECK(s.wt1(w("ba")) == 0);
  CHECK(s.wt2(w("ab")) == 1);
  CHECK(s.wt2(w("ba")) == 0);
  CHECK_THROWS_AS(restrict_ends(preset("no-descents").scheme, Letter::a, std::nullopt), std::invalid_argument);
}

TEST_CASE("scheme files") {
  const WeightScheme sec6 = load_scheme("m = 2\nwt aa = 0\nwt bb = 2");
  CHECK(sec6 == preset("sec6").scheme);
  const WeightScheme sec51 = load_scheme("m = 3\nwt aaa = 0\nwt bbb = 0");
  CHECK(sec51 == preset("sec5-1").scheme);
  const WeightScheme third = load_scheme("m = 2\nwt aa = 1/3");
  CHECK(third.wt(w("aa")) == Rational(1, 3));
  CHECK(third.wt(w("ab")) == 1);

  const WeightScheme commented = load_scheme("# comment\n\n  wt2 ab = 4/6  # trailing\nwt1 ba = 7\nm = 3\n");
  CHECK(commented.wt2(w("ab")) == Rational(2, 3));
  CHECK(commented.wt1(w("ba")) == 7);

  const WeightScheme one = load_scheme("m = 1\nwt b = 0\nwt1 = 2\nwt2 = 1/2");
  CHECK(one.wt(w("b")) == 0);
  CHECK(one.wt1(ABWord{}) == 2);
  CHECK(one.wt2(ABWord{}) == Rational(1, 2));
}

TEST_CASE("scheme file errors name the line") {
  auto error_of = [](const char* text) -> std::pair<int, std::string> {
    try {
      load_scheme(text);
    } catch (const SchemeParseError& e) {
      return {e.line(), e.what()};
    }
    return {0, ""};
  };
  const auto rational = error_of("m = 2\nwt aa = 1/0");
  CHECK(rational.first == 2);
  CHECK(rational.second.find("malformed rational") != std::string::npos);
  CHECK(error_of("m = 2\nwt aa = x").second.find("malformed rational") != std::string::npos);
  CHECK(error_of("m = 2\nwt aa = -1/-2").second.find("malformed rational") != std::string::npos);

  const auto letters = error_of("m = 2\n\nwt ac = 1");
  CHECK(letters.first == 3);
  CHECK(letters.second.find("letters") != std::string::npos);

  const auto length = error_of("wt aaa = 1\nm = 2");
  CHECK(length.first == 1);
  CHECK(length.second.find("length") != std::string::npos);

  CHECK(error_of("m = 2\nwt aa = 1\nwt aa = 2").second.find("duplicate") != std::string::npos);
  CHECK(error_of("m = 2\nweight aa = 1").second.find("unknown key") != std::string::npos);
  CHECK(error_of("wt aa = 1").second.find("missing") != std::string::npos);
  CHECK(error_of("m = 9").second.find("m must be") != std::string::npos);
}

TEST_CASE("schemes round-trip through text") {
  std::mt19937_64 rng(3);
  for (int m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      const WeightScheme s = testing_support::random_scheme(rng, m);
      CHECK(load_scheme(save_scheme(s)) == s);
    }
  }
  for (const auto& pr : presets()) CHECK(load_scheme(save_scheme(pr.scheme)) == pr.scheme);
}

TEST_CASE("presets") {
  CHECK(presets().size() == 7);
  CHECK_THROWS_AS(preset("sec7"), std::invalid_argument);
  CHECK(preset("no-descents").scheme.m() == 1);
  CHECK(preset("no-peaks").scheme.wt(w("ab")) == 0);
}

}  // TEST_SUITE
