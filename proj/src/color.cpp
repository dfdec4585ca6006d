#include "kleinsig/color.hpp"

#include <stdexcept>

namespace kleinsig {

char to_char(Color c) {
  switch (c) {
    case Color::r: return 'r';
    case Color::g: return 'g';
    case Color::b: return 'b';
  }
  return '?';
}

std::optional<Color> color_from_char(char c) {
  switch (c) {
    case 'r': return Color::r;
    case 'g': return Color::g;
    case 'b': return Color::b;
    default: return std::nullopt;
  }
}

std::string_view pair_name(ColorPair p) {
  switch (p) {
    case ColorPair::rb: return "rb";
    case ColorPair::bg: return "bg";
    case ColorPair::rg: return "rg";
  }
  return "??";
}

std::optional<ColorPair> pair_from_name(std::string_view s) {
  if (s == "rb" || s == "br") return ColorPair::rb;
  if (s == "bg" || s == "gb") return ColorPair::bg;
  if (s == "rg" || s == "gr") return ColorPair::rg;
  return std::nullopt;
}

Color complement(ColorPair p) {
  switch (p) {
    case ColorPair::rb: return Color::g;
    case ColorPair::bg: return Color::r;
    case ColorPair::rg: return Color::b;
  }
  return Color::r;
}

bool contains(ColorPair p, Color c) { return complement(p) != c; }

ColorPair pair_of(Color a, Color b) {
  if (a == b) throw std::invalid_argument("color pair needs two distinct colors");
  for (ColorPair p : kPairs)
    if (contains(p, a) && contains(p, b)) return p;
  throw std::logic_error("unreachable");
}

ColorPair other_pair(ColorPair p, Color c) {
  Color k = complement(p);
  return pair_of(c, k);
}

Color partner(ColorPair p, Color c) {
  for (Color x : kColors)
    if (x != c && contains(p, x)) return x;
  throw std::logic_error("unreachable");
}

}  // namespace kleinsig
