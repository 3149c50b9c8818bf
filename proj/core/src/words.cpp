#include "descent/words.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace descent {

std::optional<Letter> letter_from_char(char c) noexcept {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    default: return std::nullopt;
  }
}

ABWord ABWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    auto x = letter_from_char(c);
    if (!x) {
      throw std::invalid_argument("word '" + std::string(text) +
                                  "' has a letter outside {a,b}");
    }
    letters.push_back(*x);
  }
  return ABWord(std::move(letters));
}

ABWord ABWord::from_index(std::uint64_t index, std::size_t length) {
  std::vector<Letter> letters(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters[length - 1 - i] = (index >> i) & 1U ? Letter::b : Letter::a;
  }
  return ABWord(std::move(letters));
}

std::uint64_t ABWord::index() const noexcept {
  std::uint64_t idx = 0;
  for (Letter x : letters_) idx = (idx << 1) | static_cast<std::uint64_t>(x);
  return idx;
}

ABWord ABWord::substr(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) throw std::out_of_range("ABWord::substr");
  len = std::min(len, letters_.size() - pos);
  return ABWord(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string ABWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter x : letters_) s.push_back(to_char(x));
  return s;
}

ABWord operator+(const ABWord& lhs, const ABWord& rhs) {
  std::vector<Letter> v(lhs.letters_);
  v.insert(v.end(), rhs.letters_.begin(), rhs.letters_.end());
  return ABWord(std::move(v));
}

ABWord operator+(Letter lhs, const ABWord& rhs) {
  std::vector<Letter> v;
  v.reserve(rhs.size() + 1);
  v.push_back(lhs);
  v.insert(v.end(), rhs.letters_.begin(), rhs.letters_.end());
  return ABWord(std::move(v));
}

ABWord operator+(const ABWord& lhs, Letter rhs) {
  std::vector<Letter> v(lhs.letters_);
  v.push_back(rhs);
  return ABWord(std::move(v));
}

std::strong_ordering operator<=>(const ABWord& lhs, const ABWord& rhs) {
  return std::lexicographical_compare_three_way(lhs.letters_.begin(), lhs.letters_.end(),
                                                rhs.letters_.begin(), rhs.letters_.end());
}

std::vector<ABWord> all_words(std::size_t length) {
  std::vector<ABWord> words;
  const std::uint64_t count = std::uint64_t{1} << length;
  words.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) words.push_back(ABWord::from_index(i, length));
  return words;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (separated) {
    std::string tmp(text);
    std::replace(tmp.begin(), tmp.end(), ',', ' ');
    std::istringstream in(tmp);
    int v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("bad permutation '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::str() const {
  const bool wide = values_.size() > 9;
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (wide && i > 0) s.push_back(' ');
    s += std::to_string(values_[i]);
  }
  return s;
}

ABWord descent_word(const Permutation& pi) {
  if (pi.size() == 0) throw std::invalid_argument("descent_word: empty permutation");
  std::vector<Letter> letters(pi.size() - 1);
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    letters[i] = pi[i] < pi[i + 1] ? Letter::a : Letter::b;
  }
  return ABWord(std::move(letters));
}

Permutation standardize(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<int> ranks(x.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && !(x[order[r - 1]] < x[order[r]])) {
      throw std::invalid_argument("standardize: duplicate entries (measure-zero input)");
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

ABWord reverse_complement(const ABWord& u) {
  std::vector<Letter> v(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) v[i] = flip(u[u.size() - 1 - i]);
  return ABWord(std::move(v));
}

ABWord reversed(const ABWord& u) {
  std::vector<Letter> v(u.letters().rbegin(), u.letters().rend());
  return ABWord(std::move(v));
}

// ---------------------------------------------------------------------------

WeightScheme::WeightScheme(int m) : m_(m) {
  if (m < 1 || m > kMaxWindow) {
    throw std::invalid_argument("window length m must be in 1.." + std::to_string(kMaxWindow));
  }
  wt_.assign(std::size_t{1} << m, Rational(1));
  wt1_.assign(std::size_t{1} << (m - 1), Rational(1));
  wt2_.assign(std::size_t{1} << (m - 1), Rational(1));
}

void WeightScheme::check_length(const ABWord& w, int expected, const char* what) const {
  if (static_cast<int>(w.size()) != expected) {
    throw std::invalid_argument(std::string(what) + " word '" + w.str() + "' must have length " +
                                std::to_string(expected));
  }
}

const Rational& WeightScheme::wt(const ABWord& w) const {
  check_length(w, m_, "wt");
  return wt_[w.index()];
}
const Rational& WeightScheme::wt1(const ABWord& u) const {
  check_length(u, m_ - 1, "wt1");
  return wt1_[u.index()];
}
const Rational& WeightScheme::wt2(const ABWord& u) const {
  check_length(u, m_ - 1, "wt2");
  return wt2_[u.index()];
}

void WeightScheme::set_wt(const ABWord& w, Rational value) {
  check_length(w, m_, "wt");
  value.canonicalize();
  wt_[w.index()] = std::move(value);
}
void WeightScheme::set_wt1(const ABWord& u, Rational value) {
  check_length(u, m_ - 1, "wt1");
  value.canonicalize();
  wt1_[u.index()] = std::move(value);
}
void WeightScheme::set_wt2(const ABWord& u, Rational value) {
  check_length(u, m_ - 1, "wt2");
  value.canonicalize();
  wt2_[u.index()] = std::move(value);
}

bool WeightScheme::integral() const {
  auto is_int = [](const Rational& q) { return q.get_den() == 1; };
  return std::all_of(wt_.begin(), wt_.end(), is_int) &&
         std::all_of(wt1_.begin(), wt1_.end(), is_int) &&
         std::all_of(wt2_.begin(), wt2_.end(), is_int);
}

bool is_kernel_symmetric(const WeightScheme& s) {
  for (const auto& w : all_words(s.m())) {
    if (s.wt(w) != s.wt(reversed(w))) return false;
  }
  return true;
}

bool is_symmetric(const WeightScheme& s) {
  if (!is_kernel_symmetric(s)) return false;
  for (const auto& u : all_words(s.m() - 1)) {
    if (s.wt1(u) != s.wt2(reversed(u))) return false;
  }
  return true;
}

WeightScheme avoiding(int m, std::span<const ABWord> forbidden) {
  WeightScheme s(m);
  for (const auto& w : forbidden) s.set_wt(w, Rational(0));
  return s;
}

WeightScheme restrict_ends(const WeightScheme& s, std::optional<Letter> start,
                           std::optional<Letter> end) {
  if ((start || end) && s.m() < 2) {
    throw std::invalid_argument("end filters through wt1/wt2 need m >= 2");
  }
  WeightScheme r = s;
  for (const auto& u : all_words(s.m() - 1)) {
    if (start && u.front() != *start) r.set_wt1(u, Rational(0));
    if (end && u.back() != *end) r.set_wt2(u, Rational(0));
  }
  return r;
}

std::vector<Permutation> pattern_set(std::span<const ABWord> forbidden) {
  if (forbidden.empty()) return {};
  const std::size_t m = forbidden.front().size();
  for (const auto& w : forbidden) {
    if (w.size() != m) throw std::invalid_argument("pattern_set: words of unequal length");
  }
  std::set<ABWord> wanted(forbidden.begin(), forbidden.end());
  std::vector<int> v(m + 1);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation sigma(v);
    if (wanted.count(descent_word(sigma))) out.push_back(std::move(sigma));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------

SchemeParseError::SchemeParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = trim(text.substr(0, slash));
    den = trim(text.substr(slash + 1));
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den)) return std::nullopt;
  std::string num_s(num);
  if (num_s.front() == '+') num_s.erase(0, 1);
  BigInt p(num_s), q{std::string(den)};
  if (q == 0) return std::nullopt;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

struct Entry {
  std::string key;
  std::string word;
  Rational value;
  int line;
};

}  // namespace

WeightScheme load_scheme(std::string_view text) {
  std::optional<int> m;
  std::vector<Entry> entries;
  std::set<std::pair<std::string, std::string>> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw SchemeParseError(line_no, "expected '='");
    std::string_view lhs = trim(line.substr(0, eq));
    std::string_view rhs = trim(line.substr(eq + 1));

    std::string_view key = lhs;
    std::string_view word;
    if (auto sp = lhs.find_first_of(" \t"); sp != std::string_view::npos) {
      key = lhs.substr(0, sp);
      word = trim(lhs.substr(sp));
    }

    if (key == "m") {
      if (!word.empty()) throw SchemeParseError(line_no, "unexpected token after 'm'");
      if (m) throw SchemeParseError(line_no, "duplicate key 'm'");
      if (!all_digits(rhs)) throw SchemeParseError(line_no, "m must be a positive integer");
      const int value = std::stoi(std::string(rhs));
      if (value < 1 || value > WeightScheme::kMaxWindow) {
        throw SchemeParseError(line_no, "m must be in 1.." +
                                            std::to_string(WeightScheme::kMaxWindow));
      }
      m = value;
      continue;
    }
    if (key != "wt" && key != "wt1" && key != "wt2") {
      throw SchemeParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
    for (char c : word) {
      if (!letter_from_char(c)) {
        throw SchemeParseError(line_no, "word '" + std::string(word) +
                                            "' has letters outside {a,b}");
      }
    }
    auto value = parse_rational(rhs);
    if (!value) throw SchemeParseError(line_no, "malformed rational '" + std::string(rhs) + "'");
    if (!seen.emplace(std::string(key), std::string(word)).second) {
      throw SchemeParseError(line_no, "duplicate key '" + std::string(lhs) + "'");
    }
    entries.push_back({std::string(key), std::string(word), *value, line_no});
  }

  if (!m) throw SchemeParseError(line_no, "missing 'm = <int>'");

  WeightScheme s(*m);
  for (const auto& e : entries) {
    const int expected = e.key == "wt" ? *m : *m - 1;
    if (static_cast<int>(e.word.size()) != expected) {
      throw SchemeParseError(e.line, e.key + " word '" + e.word + "' has length " +
                                         std::to_string(e.word.size()) + ", expected " +
                                         std::to_string(expected) + " for m = " +
                                         std::to_string(*m));
    }
    const ABWord w = ABWord::parse(e.word);
    if (e.key == "wt") s.set_wt(w, e.value);
    else if (e.key == "wt1") s.set_wt1(w, e.value);
    else s.set_wt2(w, e.value);
  }
  return s;
}

WeightScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scheme file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scheme(buf.str());
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string save_scheme(const WeightScheme& s) {
  std::ostringstream out;
  out << "m = " << s.m() << '\n';
  for (const auto& w : all_words(s.m())) {
    if (s.wt(w) != 1) out << "wt " << w.str() << " = " << to_string(s.wt(w)) << '\n';
  }
  for (const auto& u : all_words(s.m() - 1)) {
    const std::string word = u.empty() ? "" : " " + u.str();
    if (s.wt1(u) != 1) out << "wt1" << word << " = " << to_string(s.wt1(u)) << '\n';
    if (s.wt2(u) != 1) out << "wt2" << word << " = " << to_string(s.wt2(u)) << '\n';
  }
  return out.str();
}

}  // namespace descent
