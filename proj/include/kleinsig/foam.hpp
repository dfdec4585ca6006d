#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/matrix.hpp"
#include "kleinsig/orientation.hpp"

namespace kleinsig {

class FoamError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Facet euler is the compactly supported Euler characteristic of the open
// facet, a component of F minus its seams, so chi(F) = sum of facet eulers + chi(s(F)).
struct Facet {
  Color color = Color::r;
  long euler = 0;
};

struct FoamDescriptor {
  std::vector<Facet> facets;
  int seam_circles = 0;
  int seam_arcs = 0;
  int seam_vertices = 0;
  int boundary_vertex_total = 0;
  // closed Euler characteristics of the components of F_rb, F_bg, F_rg
  std::array<std::vector<long>, 3> bicolored_component_eulers;
  bool sphere_free = true;

  long seam_euler() const { return seam_vertices + boundary_vertex_total - seam_arcs; }
  long euler() const;
  // throws FoamError when the seam cell counts are inconsistent
  void validate() const;
};

Rational chi_orb(const FoamDescriptor& f);
// requires seam_vertices == 0
bool chiorb_identity_check(const FoamDescriptor& f);

FoamDescriptor identity_cobordism(const ColoredDiagram& d);
FoamDescriptor cone_on_trivial_theta();
FoamDescriptor cone_on_tetrahedron();
// replace a seam point by a pair of seam vertices (suspension of the tetrahedral graph)
FoamDescriptor bubble(const FoamDescriptor& f);

enum class StepKind { Same, Mixed };

struct ChangeStep {
  StepKind kind = StepKind::Same;
  Color c1 = Color::r;
  Color c2 = Color::r;  // equals c1 for same steps
  int e1 = -1;
  int e2 = -1;
  int line = 0;
};

struct ChangeScript {
  std::vector<ChangeStep> steps;
  std::optional<std::string> orient;
};

class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& msg, int line);
  int line() const { return line_; }

 private:
  int line_;
};

ChangeScript parse_script(std::string_view text);
ChangeScript parse_script_file(const std::string& path);
std::string format_script(const ChangeScript& s);
// edge references in range, colors matching the edges; throws ScriptError
void check_script(const ColoredDiagram& d, const ChangeScript& s);

struct LedgerReport {
  FoamDescriptor foam;
  int V = 0;
  int same = 0;
  int mixed = 0;
  Rational cost;       // s + m/2
  Rational chi_orb;    // from the descriptor
  Rational closed_form;  // -V/2 - cost
  std::vector<std::string> warnings;
  std::vector<ChangeStep> applied;  // after rewriting illegal same steps
};

// With an orientation, a same step between two distinct edges of opposite
// sign is rewritten into two mixed steps.
LedgerReport cobordism_ledger(const ColoredDiagram& d, const ChangeScript& s,
                              const std::optional<TotalOrientation>& t = std::nullopt);

Rational slice_chi_upper_bound(const KleinInvariants& inv, bool knot_free);
Rational seamed_cobordism_upper_bound(const KleinInvariants& a, const KleinInvariants& b);

}  // namespace kleinsig
