#pragma once

#include <array>
#include <string>
#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/total_orientation.hpp"

namespace kleinsig {

// One component of a bicolored link traced on the Klein diagram, starting at
// its least arc and running forward along it.
struct BicoloredComponent {
  std::vector<ArcStep> steps;
  int least_arc = -1;
};

std::vector<BicoloredComponent> trace_bicolored(const ColoredDiagram& d, ColorPair p);

struct LinkCrossing {
  std::array<int, 4> slots{};  // link arc ids, same slot convention as the Klein diagram
  int source = -1;             // node index in the source diagram, -1 if none
};

struct LinkComponent {
  std::vector<int> arcs;  // link arcs in traversal order; empty for a free loop
  int least_source_arc = -1;
};

// Vertex-free link diagram. Every arc is stored in the canonical direction of
// its component: tail is the crossing slot it leaves, head the one it enters.
struct LinkDiagram {
  std::vector<LinkCrossing> crossings;
  std::vector<NodeSlot> tail;
  std::vector<NodeSlot> head;
  std::vector<int> arc_component;
  std::vector<LinkComponent> components;

  int arc_count() const { return static_cast<int>(tail.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  int component_count() const { return static_cast<int>(components.size()); }
  int arc_at(NodeSlot e) const { return crossings.at(e.node).slots.at(e.slot); }
};

struct OrientedLinkDiagram {
  LinkDiagram base;
  std::vector<std::int8_t> direction;  // per component, +1 keeps the canonical direction

  NodeSlot tail(int arc) const;
  NodeSlot head(int arc) const;
};

LinkDiagram bicolored_link(const ColoredDiagram& d, Color i, Color j);
LinkDiagram bicolored_link(const ColoredDiagram& d, ColorPair p);
OrientedLinkDiagram oriented_bicolored(const ColoredDiagram& d, const TotalOrientation& t, ColorPair p);
OrientedLinkDiagram orient(LinkDiagram l, std::vector<std::int8_t> direction);

// Link built directly from a crossing list; arcs are traced from the slot
// pairs {0,2} and {1,3}. Components ordered by least arc id. Extra free loops
// may be appended.
LinkDiagram link_from_crossings(const std::vector<std::array<int, 4>>& crossings, int free_loops = 0);

// Link from an oriented crossing list: arc a runs from tails[a] to heads[a].
// Components are ordered by least arc id and keep the given direction.
LinkDiagram link_from_oriented(const std::vector<std::array<int, 4>>& crossings,
                               const std::vector<NodeSlot>& tails, const std::vector<NodeSlot>& heads,
                               int free_loops = 0);

struct ComponentCount {
  std::array<int, 3> per_pair{};  // indexed by ColorPair
  int mu = 0;
  bool hamiltonian = false;
};

ComponentCount component_count(const ColoredDiagram& d);

int crossing_sign(int crossing, const OrientedLinkDiagram& o);
int writhe(const OrientedLinkDiagram& o);
int linking_number(const OrientedLinkDiagram& o, int c1, int c2);
// sum of pairwise linking numbers of an oriented link
int link_total_linking(const OrientedLinkDiagram& o);
int total_linking(const ColoredDiagram& d, const TotalOrientation& t);

std::vector<LinkDiagram> split_decompose(const LinkDiagram& l);
std::vector<OrientedLinkDiagram> split_decompose(const OrientedLinkDiagram& o);

// crossings only, in the .ksg grammar; free loops noted in a comment
std::string to_ksg(const LinkDiagram& l);

}  // namespace kleinsig
