#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace kleinsig {

enum class Color : std::uint8_t { r = 0, g = 1, b = 2 };

inline constexpr std::array<Color, 3> kColors{Color::r, Color::g, Color::b};

char to_char(Color c);
std::optional<Color> color_from_char(char c);

// Bicolored links in report order. The complement color of rb is g, of bg is r, of rg is b.
enum class ColorPair : std::uint8_t { rb = 0, bg = 1, rg = 2 };

inline constexpr std::array<ColorPair, 3> kPairs{ColorPair::rb, ColorPair::bg, ColorPair::rg};

std::string_view pair_name(ColorPair p);
std::optional<ColorPair> pair_from_name(std::string_view s);
Color complement(ColorPair p);
bool contains(ColorPair p, Color c);
// throws std::invalid_argument when a == b
ColorPair pair_of(Color a, Color b);
// the pair that contains c and is not p; requires contains(p, c)
ColorPair other_pair(ColorPair p, Color c);
// the color of p that is not c
Color partner(ColorPair p, Color c);

inline int index(Color c) { return static_cast<int>(c); }
inline int index(ColorPair p) { return static_cast<int>(p); }

}  // namespace kleinsig
