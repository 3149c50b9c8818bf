#include "descent/presets.hpp"

#include <stdexcept>

namespace descent {

namespace {

WeightScheme avoid_words(int m, std::initializer_list<const char*> words) {
  std::vector<ABWord> forbidden;
  for (const char* w : words) forbidden.push_back(ABWord::parse(w));
  return avoiding(m, forbidden);
}

std::vector<Preset> make_presets() {
  WeightScheme sec6(2);
  sec6.set_wt(ABWord::parse("aa"), Rational(0));
  sec6.set_wt(ABWord::parse("bb"), Rational(2));

  return {
      {"sec5-1", "no triple ascents, no triple descents (avoid aaa, bbb)",
       avoid_words(3, {"aaa", "bbb"})},
      {"sec5-2", "no isolated ascents or descents (avoid aba, bab)",
       avoid_words(3, {"aba", "bab"})},
      {"sec6", "no double ascents, weight 2 per double descent", sec6},
      {"no-descents", "avoid b (only the identity)", avoid_words(1, {"b"})},
      {"no-peaks", "avoid ab (no peaks)", avoid_words(2, {"ab"})},
      {"alternating", "avoid aa, bb (alternating permutations)", avoid_words(2, {"aa", "bb"})},
      {"all-ones", "every weight 1 (all permutations)", WeightScheme(2)},
  };
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = make_presets();
  return all;
}

const Preset& preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace descent
