#pragma once

#include <optional>
#include <stdexcept>

#include "kleinsig/diagram.hpp"
#include "kleinsig/orientation.hpp"

namespace kleinsig {

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Transformed {
  ColoredDiagram d;
  std::optional<TotalOrientation> t;
};

// Over and under swapped at every crossing: new slot j holds old slot j+1.
Transformed mirror(const ColoredDiagram& d, const std::optional<TotalOrientation>& t = std::nullopt);

// Half-turn about an axis in the projection plane; an isotopy that reverses
// every cyclic order and swaps over and under.
Transformed flip(const ColoredDiagram& d, const std::optional<TotalOrientation>& t = std::nullopt);

// Every crossing with its other under end moved to slot 0; mirror twice gives this.
ColoredDiagram half_turn_crossings(const ColoredDiagram& d);

// Straight joins the start of the first cut arc of e1 to the end of the cut
// arc of e2; Crossed joins start to start. Auto is Straight without
// orientations and otherwise the matching the orientations force.
enum class Matching { Auto, Straight, Crossed };

// #2 along edges e1 of d1 and e2 of d2 (same color). Orientations are both
// given or both absent.
Transformed edge_sum(const ColoredDiagram& d1, int e1, const ColoredDiagram& d2, int e2,
                     const std::optional<TotalOrientation>& t1 = std::nullopt,
                     const std::optional<TotalOrientation>& t2 = std::nullopt, Matching m = Matching::Auto);

// #3 at vertex v1 of d1 and vertex v2 of d2 (node indices). With orientations
// the two vertices must have opposite codes.
Transformed vertex_sum(const ColoredDiagram& d1, int v1, const ColoredDiagram& d2, int v2,
                       const std::optional<TotalOrientation>& t1 = std::nullopt,
                       const std::optional<TotalOrientation>& t2 = std::nullopt);

// Split union, d2 placed in a face of d1.
Transformed disjoint_union(const ColoredDiagram& d1, const ColoredDiagram& d2,
                           const std::optional<TotalOrientation>& t1 = std::nullopt,
                           const std::optional<TotalOrientation>& t2 = std::nullopt);

// node indices of the vertices, in node order
std::vector<int> vertex_nodes(const ColoredDiagram& d);

}  // namespace kleinsig
