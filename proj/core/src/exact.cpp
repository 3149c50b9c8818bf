#include "descent/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace descent::exact {

bool EndFilter::accepts(const ABWord& u) const {
  if (!active()) return true;
  if (u.empty()) return false;
  if (start && u.front() != *start) return false;
  if (end && u.back() != *end) return false;
  return true;
}

Rational word_weight(const WeightScheme& s, const ABWord& u) {
  const std::size_t m = static_cast<std::size_t>(s.m());
  if (u.size() + 1 < m) {
    throw std::invalid_argument("word_weight: descent word shorter than m-1");
  }
  Rational w = s.wt1(u.substr(0, m - 1));
  for (std::size_t i = 0; i + m <= u.size(); ++i) {
    if (w == 0) return w;
    w *= s.wt(u.substr(i, m));
  }
  w *= s.wt2(u.substr(u.size() + 1 - m, m - 1));
  return w;
}

Rational wt_of_permutation(const WeightScheme& s, const Permutation& pi) {
  if (static_cast<int>(pi.size()) < s.m()) {
    throw std::invalid_argument("wt_of_permutation: permutation of length " +
                                std::to_string(pi.size()) + " is shorter than m = " +
                                std::to_string(s.m()));
  }
  return word_weight(s, descent_word(pi));
}

namespace {

void check_filter(int n, const EndFilter& filter) {
  if (filter.active() && n < 2) {
    throw std::invalid_argument("refined counts need n >= 2");
  }
}

}  // namespace

WeightedCount brute_force_alpha(const WeightScheme& s, int n, EndFilter filter, int cap) {
  if (n < 0) throw std::invalid_argument("brute_force_alpha: negative n");
  if (n > cap) {
    throw std::invalid_argument("brute_force_alpha: n = " + std::to_string(n) +
                                " exceeds the brute-force cap " + std::to_string(cap) +
                                "; use dp_alpha");
  }
  check_filter(n, filter);
  if (n == 0) return {0, Rational(1)};

  // Wt depends on pi only through u(pi), so tally permutations per descent
  // word and weight each word once.
  const int len = n - 1;
  std::vector<unsigned long> tally(std::size_t{1} << len, 0);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    std::uint64_t mask = 0;
    for (int i = 0; i < len; ++i) mask = (mask << 1) | (v[i] > v[i + 1] ? 1U : 0U);
    ++tally[mask];
  } while (std::next_permutation(v.begin(), v.end()));

  Rational total(0);
  for (std::uint64_t mask = 0; mask < tally.size(); ++mask) {
    if (tally[mask] == 0) continue;
    const ABWord u = ABWord::from_index(mask, static_cast<std::size_t>(len));
    if (!filter.accepts(u)) continue;
    if (n < s.m()) {
      total += Rational(tally[mask]);
    } else {
      total += word_weight(s, u) * Rational(tally[mask]);
    }
  }
  return {n, total};
}

namespace {

template <class Num>
Num convert(const Rational& q);

template <>
BigInt convert<BigInt>(const Rational& q) {
  return q.get_num();
}
template <>
Rational convert<Rational>(const Rational& q) {
  return q;
}

template <class Num>
Num run_dp(const WeightScheme& s, int n, const EndFilter& filter) {
  const int m = s.m();
  const bool weighted = n >= m;
  const int keep = std::max(m - 1, 1);  // letters of suffix carried in the state
  const std::uint64_t keep_mask = (std::uint64_t{1} << keep) - 1;
  const std::uint64_t window_mask = (std::uint64_t{1} << (m - 1)) - 1;

  std::vector<Num> wt(s.window_count()), wt1(s.state_count()), wt2(s.state_count());
  for (std::size_t i = 0; i < wt.size(); ++i) wt[i] = convert<Num>(s.wt(i));
  for (std::size_t i = 0; i < wt1.size(); ++i) {
    wt1[i] = convert<Num>(s.wt1(i));
    wt2[i] = convert<Num>(s.wt2(i));
  }

  // cur[suffix][rank]; suffix holds the last min(i-1, keep) letters.
  const std::size_t suffixes = std::size_t{1} << keep;
  std::vector<std::vector<Num>> cur(suffixes), next(suffixes);
  cur[0].assign(1, Num(1));
  if (weighted && m == 1) cur[0][0] *= wt1[0];

  for (int i = 1; i < n; ++i) {
    for (auto& row : next) row.assign(static_cast<std::size_t>(i + 1), Num(0));
    for (std::uint64_t suf = 0; suf < suffixes; ++suf) {
      if (cur[suf].empty()) continue;
      for (int r = 0; r < i; ++r) {
        const Num& w0 = cur[suf][static_cast<std::size_t>(r)];
        if (w0 == 0) continue;
        for (int letter = 0; letter < 2; ++letter) {
          if (i == 1 && filter.start && static_cast<int>(*filter.start) != letter) continue;
          Num w = w0;
          if (weighted) {
            if (i >= m) {
              const std::uint64_t window = ((suf & window_mask) << 1) | letter;
              w *= wt[window];
            } else if (i == m - 1) {
              w *= wt1[(suf << 1 | letter) & window_mask];
            }
            if (w == 0) continue;
          }
          const std::uint64_t nsuf = ((suf << 1) | letter) & keep_mask;
          auto& dst = next[nsuf];
          // ascent: new rank r' in r+1..i; descent: r' in 0..r
          if (letter == 0) {
            for (int rp = r + 1; rp <= i; ++rp) dst[static_cast<std::size_t>(rp)] += w;
          } else {
            for (int rp = 0; rp <= r; ++rp) dst[static_cast<std::size_t>(rp)] += w;
          }
        }
      }
    }
    std::swap(cur, next);
  }

  Num total(0);
  for (std::uint64_t suf = 0; suf < suffixes; ++suf) {
    if (cur[suf].empty()) continue;
    if (filter.end && n >= 2 && static_cast<int>(*filter.end) != static_cast<int>(suf & 1U)) {
      continue;
    }
    Num row(0);
    for (const auto& w : cur[suf]) row += w;
    if (weighted) row *= wt2[suf & window_mask];
    total += row;
  }
  return total;
}

}  // namespace

WeightedCount dp_alpha(const WeightScheme& s, int n, EndFilter filter) {
  if (n < 0) throw std::invalid_argument("dp_alpha: negative n");
  check_filter(n, filter);
  if (n == 0) return {0, Rational(1)};
  if (s.integral()) return {n, Rational(run_dp<BigInt>(s, n, filter))};
  Rational v = run_dp<Rational>(s, n, filter);
  v.canonicalize();
  return {n, v};
}

}  // namespace descent::exact
