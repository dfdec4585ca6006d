#include <doctest.h>

#include "corpus.hpp"
#include "kleinsig/braid.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/linkops.hpp"
#include "kleinsig/orientation.hpp"

using namespace kleinsig;

namespace {

OrientedLinkDiagram closure(int strands, std::vector<int> letters) { return braid_closure({strands, std::move(letters)}); }

}  // namespace

TEST_CASE("trivial theta: every bicolored link is a 0-crossing unknot") {
  ColoredDiagram d = gen_trivial_theta();
  for (ColorPair p : kPairs) {
    LinkDiagram l = bicolored_link(d, p);
    CHECK(l.component_count() == 1);
    CHECK(l.crossing_count() == 0);
  }
  ComponentCount c = component_count(d);
  CHECK(c.mu == 3);
  CHECK(c.hamiltonian);
}

TEST_CASE("bicolored link of a pair equals the link of its two colors in either order") {
  ColoredDiagram d = generate("theta-n", {2}).d;
  for (ColorPair p : kPairs) {
    Color c = complement(p);
    Color i = c == Color::r ? Color::g : Color::r;
    Color j = partner(p, i);
    CHECK(to_ksg(bicolored_link(d, i, j)) == to_ksg(bicolored_link(d, p)));
    CHECK(to_ksg(bicolored_link(d, j, i)) == to_ksg(bicolored_link(d, p)));
  }
}

TEST_CASE("component counts") {
  CHECK(component_count(gen_tetrahedron()).mu == 3);
  CHECK(component_count(gen_tetrahedron()).hamiltonian);
  ComponentCount two = component_count(generate("two-theta", {}).d);
  CHECK(two.mu == 6);
  CHECK_FALSE(two.hamiltonian);
  CHECK(two.per_pair == std::array<int, 3>{2, 2, 2});
  ComponentCount torus = component_count(gen_torus2k(2));
  CHECK(torus.per_pair[index(ColorPair::rb)] == 2);
  CHECK_FALSE(torus.hamiltonian);
}

TEST_CASE("crossing signs follow the right-hand rule") {
  OrientedLinkDiagram pos = closure(2, {1, 1});
  OrientedLinkDiagram neg = closure(2, {-1, -1});
  for (int c = 0; c < 2; ++c) {
    CHECK(crossing_sign(c, pos) == 1);
    CHECK(crossing_sign(c, neg) == -1);
  }
  CHECK(writhe(closure(2, {1, 1, 1})) == 3);
  CHECK(writhe(closure(3, {1, -2, 1, -2})) == 0);
}

TEST_CASE("linking numbers") {
  OrientedLinkDiagram hopf = closure(2, {1, 1});
  REQUIRE(hopf.base.component_count() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);
  CHECK(linking_number(hopf, 1, 0) == 1);
  CHECK(linking_number(closure(2, {-1, -1, -1, -1}), 0, 1) == -2);
  // reversing one component negates its linking numbers
  OrientedLinkDiagram rev = orient(hopf.base, {hopf.direction[0], static_cast<std::int8_t>(-hopf.direction[1])});
  CHECK(linking_number(rev, 0, 1) == -1);
  // three-strand pure braid: each pair links once
  OrientedLinkDiagram three = closure(3, {1, 1, 2, 2, 1, 1});
  CHECK(three.base.component_count() == 3);
  CHECK(link_total_linking(three) == 2 + 1);
}

TEST_CASE("torus2k red-blue link is T(2,2k) with linking number k") {
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    ColoredDiagram d = gen_torus2k(k);
    TotalOrientation t = default_orientation(d);
    OrientedLinkDiagram o = oriented_bicolored(d, t, ColorPair::rb);
    REQUIRE(o.base.component_count() == 2);
    CHECK(std::abs(linking_number(o, 0, 1)) == k);
    CHECK(o.base.crossing_count() == 2 * k);
  }
}

TEST_CASE("total linking sums the three bicolored links") {
  ColoredDiagram d = gen_torus2k(2);
  for (const auto& t : enumerate_orientations(d)) {
    int sum = 0;
    for (ColorPair p : kPairs) sum += link_total_linking(oriented_bicolored(d, t, p));
    CHECK(total_linking(d, t) == sum);
  }
}

TEST_CASE("split decomposition") {
  LinkDiagram unlink = link_from_crossings({}, 3);
  CHECK(split_decompose(unlink).size() == 3);
  ColoredDiagram two = generate("two-theta", {}).d;
  for (ColorPair p : kPairs) CHECK(split_decompose(bicolored_link(two, p)).size() == 2);
  OrientedLinkDiagram hopf = closure(2, {1, 1});
  CHECK(split_decompose(hopf).size() == 1);
  // Hopf link plus a far unknot
  LinkDiagram with_loop = link_from_crossings({{1, 3, 2, 4}, {2, 4, 1, 3}}, 1);
  CHECK(with_loop.component_count() == 3);
  CHECK(split_decompose(with_loop).size() == 2);
}

TEST_CASE("components are ordered by least arc") {
  for (const auto& entry : generator_corpus())
    for (ColorPair p : kPairs) {
      auto comps = trace_bicolored(entry.d, p);
      for (std::size_t c = 1; c < comps.size(); ++c) CHECK(comps[c - 1].least_arc < comps[c].least_arc);
      int steps = 0;
      for (const auto& c : comps) steps += static_cast<int>(c.steps.size());
      int arcs = 0;
      for (int a = 0; a < entry.d.arc_count(); ++a) arcs += contains(p, entry.d.color(a));
      CHECK(steps == arcs);
    }
}

TEST_CASE("oriented link arcs run tail to head") {
  ColoredDiagram d = generate("kinoshita", {1, 1, 1}).d;
  for (const auto& t : enumerate_orientations(d))
    for (ColorPair p : kPairs) {
      OrientedLinkDiagram o = oriented_bicolored(d, t, p);
      for (int a = 0; a < o.base.arc_count(); ++a) {
        NodeSlot h = o.head(a);
        // the head of an arc is an incoming slot: 0 or 2 for under, 1 or 3 for over
        CHECK(o.base.arc_at(h) == a);
        CHECK(o.base.arc_at(o.tail(a)) == a);
      }
    }
}
