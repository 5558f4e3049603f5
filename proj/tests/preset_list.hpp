#pragma once

#include <vector>

#include "wick/catalog.hpp"

namespace wick::testing {

/// One instance of every catalog family at representative parameters.
inline std::vector<PresetSpec> sample_presets() {
  const auto r = Scalar::ratio;
  return {
      {"zero", 2, {}},
      {"qccr", 2, {{"q", r(1, 2)}}},
      {"qccr", 3, {{"q", r(-1, 3)}}},
      {"clifford", 3, {}},
      {"qij", 3, {{"q12", Scalar(Rational(1, 2), Rational(1, 3))}, {"q13", r(-1, 4)}, {"q22", r(1, 5)}}},
      {"tlw", 3, {{"q", r(1, 3)}}},
      {"tlw", 2, {{"q", r(-1, 2)}}},
      {"twisted_ccr", 3, {{"mu", r(1, 2)}}},
      {"twisted_car", 3, {{"mu", r(1, 2)}}},
      {"mucar", 3, {{"mu", r(1, 3)}}},
      {"snu2", 0, {{"nu", r(1, 2)}}},
      {"degenerate", 2, {}},
      {"usym", 2, {{"q", r(1, 3)}, {"lambda", r(1, 4)}}},
      {"aklt", 0, {{"lambda", r(1, 1)}}},
      {"bs_ce", 0, {{"tau", r(3, 5)}}},
      {"bp_ce", 0, {{"lambda", Scalar(12)}, {"eps", r(-1, 10)}}},
      {"e91", 0, {{"mu", Scalar(2)}}},
  };
}

}  // namespace wick::testing
