#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kleinsig/color.hpp"

namespace kleinsig {

// A direction (+1 or -1, relative to canonical traversal) for every
// component of each bicolored link, indexed by ColorPair.
struct TotalOrientation {
  std::array<std::vector<std::int8_t>, 3> dirs;

  const std::vector<std::int8_t>& operator[](ColorPair p) const { return dirs[index(p)]; }
  std::vector<std::int8_t>& operator[](ColorPair p) { return dirs[index(p)]; }
  int bit_count() const {
    return static_cast<int>(dirs[0].size() + dirs[1].size() + dirs[2].size());
  }
  bool operator==(const TotalOrientation&) const = default;
};

}  // namespace kleinsig
