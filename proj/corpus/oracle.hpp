#pragma once

// Reference computations that share no code with the library algorithms they check.

#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/linkops.hpp"
#include "kleinsig/matrix.hpp"

namespace kleinsig::oracle {

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Characteristic polynomial by Faddeev-LeVerrier, roots counted with
// Descartes' rule (exact for a real-rooted polynomial).
Inertia descartes_inertia(const IntMatrix& m);
std::vector<Rational> characteristic_polynomial(const IntMatrix& m);  // c_0 .. c_n

// Gordon-Litherland: signature of the checkerboard Goeritz form minus the
// correction from orientation-incoherent crossings. Connected diagrams with
// at least one crossing.
int gordon_litherland_signature(const OrientedLinkDiagram& o);

// Euler-characteristic planarity test of the rotation system.
bool planar(const ColoredDiagram& d);
bool planar(const LinkDiagram& l);

// Seifert matrix of the closed 2-braid sigma_1^k read off an explicit surface
// in R^3 (two stacked disks, k half-twisted bands) by counting signed crossings
// of each generator loop with the pushoffs of the others.
IntMatrix geometric_two_braid_seifert(int k);
// linking number of the two boundary circles of the k = 2 surface
int geometric_hopf_boundary_linking();

// (2, 2n+1) torus knot: 2n x 2n, -1 on the diagonal, +1 above it.
IntMatrix torus_two_closed_form(int n);

}  // namespace kleinsig::oracle
