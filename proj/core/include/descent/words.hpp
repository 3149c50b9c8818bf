#pragma once

// Alphabet {a, b}, descent words, permutations and weight schemes.
//
// Words are ordered lexicographically with a < b. The integer index of a word
// reads its letters as binary digits (a = 0, b = 1) with the first letter most
// significant, so for length 2 the order is aa, ab, ba, bb. Every table in
// the library (weights, transfer matrices, piecewise functions) uses this
// indexing.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace descent {

using Rational = mpq_class;
using BigInt = mpz_class;

enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr Letter flip(Letter x) noexcept {
  return x == Letter::a ? Letter::b : Letter::a;
}
constexpr char to_char(Letter x) noexcept { return x == Letter::a ? 'a' : 'b'; }
std::optional<Letter> letter_from_char(char c) noexcept;

class ABWord {
 public:
  ABWord() = default;
  explicit ABWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Parses a string over {a, b}; the empty string is the empty word.
  /// Throws std::invalid_argument on any other character.
  static ABWord parse(std::string_view text);
  static ABWord from_index(std::uint64_t index, std::size_t length);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  std::uint64_t index() const noexcept;
  ABWord substr(std::size_t pos, std::size_t len) const;
  std::string str() const;

  friend ABWord operator+(const ABWord& lhs, const ABWord& rhs);
  friend ABWord operator+(Letter lhs, const ABWord& rhs);
  friend ABWord operator+(const ABWord& lhs, Letter rhs);
  friend bool operator==(const ABWord&, const ABWord&) = default;
  friend std::strong_ordering operator<=>(const ABWord& lhs, const ABWord& rhs);

 private:
  std::vector<Letter> letters_;
};

/// All words of the given length in lexicographic order.
std::vector<ABWord> all_words(std::size_t length);

class Permutation {
 public:
  Permutation() = default;
  /// Values must be a bijection on {1..n}; throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> values);
  /// One-line notation; single digits ("2413") or space/comma separated.
  static Permutation parse(std::string_view text);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Letter i is a iff pi_i < pi_{i+1}. Requires length >= 1.
ABWord descent_word(const Permutation& pi);

/// The permutation with the same relative order as x. Throws
/// std::invalid_argument when two entries coincide.
Permutation standardize(std::span<const double> x);

/// Reverse the word and swap a <-> b; the descent-word image of reading a
/// permutation backwards, pi -> (pi_n, ..., pi_1).
ABWord reverse_complement(const ABWord& u);

/// The word read backwards, letters unchanged; the descent-word image of
/// pi -> (n+1-pi_n, ..., n+1-pi_1), which is also how the J involution
/// permutes the descent polytopes.
ABWord reversed(const ABWord& u);

/// Weights wt on {a,b}^m and initial/final weights wt1, wt2 on {a,b}^(m-1),
/// all exact rationals. Unset entries are 1.
class WeightScheme {
 public:
  static constexpr int kMaxWindow = 7;

  explicit WeightScheme(int m);

  int m() const noexcept { return m_; }
  std::size_t window_count() const noexcept { return wt_.size(); }
  std::size_t state_count() const noexcept { return wt1_.size(); }

  const Rational& wt(const ABWord& w) const;
  const Rational& wt1(const ABWord& u) const;
  const Rational& wt2(const ABWord& u) const;
  const Rational& wt(std::uint64_t index) const { return wt_.at(index); }
  const Rational& wt1(std::uint64_t index) const { return wt1_.at(index); }
  const Rational& wt2(std::uint64_t index) const { return wt2_.at(index); }

  void set_wt(const ABWord& w, Rational value);
  void set_wt1(const ABWord& u, Rational value);
  void set_wt2(const ABWord& u, Rational value);

  /// True when every wt, wt1, wt2 entry is an integer.
  bool integral() const;

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;

 private:
  void check_length(const ABWord& w, int expected, const char* what) const;

  int m_;
  std::vector<Rational> wt_;
  std::vector<Rational> wt1_;
  std::vector<Rational> wt2_;
};

/// wt(w) = wt(reversed(w)) for every window and wt1(u) = wt2(reversed(u)),
/// i.e. Wt is invariant under pi -> (n+1-pi_n, ..., n+1-pi_1).
bool is_symmetric(const WeightScheme& s);
/// Only the window weights are invariant. This is what the operator itself
/// needs for the adjoint eigenfunction to be J of the eigenfunction; wt1 and
/// wt2 never enter the operator.
bool is_kernel_symmetric(const WeightScheme& s);

/// The scheme with weight 0 on every word of U and 1 elsewhere.
WeightScheme avoiding(int m, std::span<const ABWord> forbidden);

/// Multiplies wt1 by [first letter = start] and wt2 by [last letter = end],
/// turning alpha_n into the refined count alpha_n(start, end) for n >= m.
/// Requires m >= 2 when a filter is given.
WeightScheme restrict_ends(const WeightScheme& s, std::optional<Letter> start,
                           std::optional<Letter> end);

/// All sigma in S_{m+1} whose descent word lies in U (words of one length m).
std::vector<Permutation> pattern_set(std::span<const ABWord> forbidden);

class SchemeParseError : public std::runtime_error {
 public:
  SchemeParseError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Parses the scheme file format:
///   m = <int>
///   wt <word> = <rational>      (and wt1 / wt2 on words of length m-1)
/// '#' starts a comment, blank lines are ignored, line order is irrelevant
/// and a repeated key is an error.
WeightScheme load_scheme(std::string_view text);
WeightScheme load_scheme_file(const std::string& path);

/// Writes every entry that differs from 1; load_scheme(save_scheme(s)) == s.
std::string save_scheme(const WeightScheme& s);

std::string to_string(const Rational& q);

}  // namespace descent
