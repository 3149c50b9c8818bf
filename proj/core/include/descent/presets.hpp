#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "descent/words.hpp"

namespace descent {

struct Preset {
  std::string name;
  std::string description;
  WeightScheme scheme;
};

/// Built-in schemes:
///   sec5-1       avoid {aaa, bbb}  (no triple ascents or descents, m = 3)
///   sec5-2       avoid {aba, bab}  (no isolated ascents or descents, m = 3)
///   sec6         wt(aa) = 0, wt(bb) = 2, m = 2
///   no-descents  avoid {b}, m = 1
///   no-peaks     avoid {ab}, m = 2
///   alternating  avoid {aa, bb}, m = 2
///   all-ones     every weight 1, m = 2
const std::vector<Preset>& presets();
/// Throws std::invalid_argument for an unknown name.
const Preset& preset(std::string_view name);

}  // namespace descent
