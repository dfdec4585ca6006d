#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/foam.hpp"

namespace kleinsig {

struct Generated {
  ColoredDiagram d;
  std::optional<ChangeScript> script;  // crossing changes to the trivial theta
};

ColoredDiagram gen_trivial_theta();
ColoredDiagram gen_tetrahedron();
ColoredDiagram gen_prism();
// theta curve whose three constituents are T(2,2n+1), with its n same + n mixed script
Generated gen_theta_n(int n);
// p, q, r full twists between the edge pairs (r,g), (g,b), (r,b)
ColoredDiagram gen_kinoshita(int p, int q, int r);
// red and blue closed 2-braid sigma1^(2k) plus a split green kink
ColoredDiagram gen_torus2k(int k);
// trivial theta and a split one-crossing red circle
ColoredDiagram gen_theta_kink();

// Families: trivial-theta, tetrahedron, prism, theta-n N, kinoshita P Q R,
// torus2k K, theta-kink, two-theta, theta-sum2, tet-sum2.
Generated generate(const std::string& family, const std::vector<int>& params);
std::vector<std::string> generator_families();

// Vertices-only diagram from straight-line planar coordinates.
struct PlanarEdge {
  int a;
  int b;
  Color color;
};
ColoredDiagram planar_graph(const std::vector<std::pair<double, double>>& points, const std::vector<PlanarEdge>& edges,
                            const std::string& name);

}  // namespace kleinsig
