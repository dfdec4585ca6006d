#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "kleinsig/diagram.hpp"
#include "kleinsig/generators.hpp"

using namespace kleinsig;

namespace {

const char* kTheta = R"(# simplest Klein graph
name theta
vertex 10: 5 6 7
vertex 20: 5 7 6
color 5=r 6=g 7=b
)";

ValidationKind kind_of(std::string_view text) {
  try {
    parse(text);
  } catch (const ValidationError& e) {
    return e.kind();
  }
  FAIL("no validation error");
  return ValidationKind::Structure;
}

}  // namespace

TEST_CASE("trivial theta parses to two vertices and three edges") {
  ColoredDiagram d = parse(kTheta);
  CHECK(d.name() == "theta");
  CHECK(d.vertex_count() == 2);
  CHECK(d.crossing_count() == 0);
  CHECK(d.arc_count() == 3);
  REQUIRE(d.edges().size() == 3);
  std::set<Color> colors;
  for (const auto& e : d.edges()) {
    colors.insert(e.color);
    REQUIRE_FALSE(e.closed());
    CHECK(e.start->node != e.end->node);
  }
  CHECK(colors.size() == 3);
}

TEST_CASE("canonical numbering ignores the ids written in the file") {
  ColoredDiagram a = parse(kTheta);
  ColoredDiagram b = parse_file(KLEINSIG_TEST_DATA "/trivial_theta.ksg");
  CHECK(a == b);
}

TEST_CASE("tetrahedron has six edges, two per color") {
  ColoredDiagram d = parse_file(KLEINSIG_TEST_DATA "/tetrahedron.ksg");
  CHECK(d.vertex_count() == 4);
  CHECK(d.crossing_count() == 0);
  REQUIRE(d.edges().size() == 6);
  std::array<int, 3> per{};
  for (const auto& e : d.edges()) ++per[index(e.color)];
  CHECK(per == std::array<int, 3>{2, 2, 2});
}

TEST_CASE("knot components survive a round trip") {
  ColoredDiagram d = parse_file(KLEINSIG_TEST_DATA "/theta_kink.ksg");
  CHECK(d.edges().size() == 4);
  int closed = 0;
  for (const auto& e : d.edges()) closed += e.closed();
  CHECK(closed == 1);
  ColoredDiagram again = parse(serialize(d));
  CHECK(again == d);
  CHECK(again.edges().size() == 4);
}

TEST_CASE("validation errors are classified") {
  CHECK(kind_of("vertex 1: 1 2 3\nvertex 2: 1 2 4\ncolor 1=r 2=g 3=b 4=b\n") == ValidationKind::ArcMultiplicity);
  CHECK(kind_of("vertex 1: 1 2 3\nvertex 2: 1 3 2\ncolor 1=r 2=g\n") == ValidationKind::UncoloredArc);
  CHECK(kind_of("vertex 1: 1 2 3\nvertex 2: 1 3 2\ncolor 1=r 2=g 3=g\n") == ValidationKind::VertexColors);
  CHECK(kind_of("crossing 1: 1 2 2 1\ncolor 1=r 2=r\n") == ValidationKind::MissingColor);
  CHECK(kind_of("") == ValidationKind::Structure);
  std::string constancy =
      "vertex 1: 1 2 3\nvertex 2: 7 8 3\ncrossing 3: 1 2 7 8\ncolor 1=r 2=g 3=b 7=g 8=r\n";
  CHECK(kind_of(constancy) == ValidationKind::ColorConstancy);
}

TEST_CASE("hand-built malformed file fails color constancy") {
  try {
    parse_file(KLEINSIG_TEST_DATA "/bad_constancy.ksg");
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == ValidationKind::ColorConstancy);
  }
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_file(KLEINSIG_TEST_DATA "/bad_syntax.ksg");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse("vertex 1: 1 2 3\nedge 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("vertex 1 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse("vertex 1: 1 2 3\ncolor 1=q\n"), ParseError);
  CHECK_THROWS_AS(parse("vertex 1: 1 2 3\nvertex 1: 1 3 2\ncolor 1=r 2=g 3=b\n"), ParseError);
  CHECK_THROWS_AS(parse("vertex 1: 0 2 3\n"), ParseError);
}

TEST_CASE("a slot count that does not match the node kind is rejected") {
  CHECK_THROWS(parse("vertex 1: 1 2\ncolor 1=r 2=g\n"));
  CHECK_THROWS(parse("crossing 1: 1 1 2\ncolor 1=r 2=r\n"));
}

TEST_CASE("every corpus diagram round-trips and has 3V/2 + closed edges") {
  for (const auto& entry : generator_corpus()) {
    CAPTURE(entry.name);
    const ColoredDiagram& d = entry.d;
    ColoredDiagram again = parse(serialize(d));
    CHECK(again == d);
    CHECK(serialize(again) == serialize(d));
    int closed = 0;
    std::vector<int> seen(d.arc_count(), 0);
    for (const auto& e : d.edges()) {
      closed += e.closed();
      for (const auto& st : e.run) ++seen[st.arc];
    }
    CHECK(static_cast<int>(d.edges().size()) == 3 * d.vertex_count() / 2 + closed);
    for (int a = 0; a < d.arc_count(); ++a) CHECK(seen[a] == 1);
    CHECK(derive_edges(d).size() == d.edges().size());
  }
}

TEST_CASE("edges are ordered by least arc and runs are color constant") {
  ColoredDiagram d = generate("theta-n", {2}).d;
  int prev = -1;
  for (const auto& e : d.edges()) {
    int least = d.arc_count();
    for (const auto& st : e.run) {
      least = std::min(least, st.arc);
      CHECK(d.color(st.arc) == e.color);
    }
    CHECK(least > prev);
    prev = least;
  }
}

TEST_CASE("crossing slot 0 is an under-strand end") {
  for (const auto& entry : generator_corpus())
    for (const auto& n : entry.d.nodes()) {
      if (n.kind != NodeKind::Crossing) continue;
      CHECK(entry.d.color(n.slots[0]) == entry.d.color(n.slots[2]));
      CHECK(entry.d.color(n.slots[1]) == entry.d.color(n.slots[3]));
    }
}

TEST_CASE("orient lines are kept verbatim") {
  ColoredDiagram d = parse(std::string(kTheta) + "orient rb:c0=- bg:c0=+ rg:c0=+\n");
  REQUIRE(d.orient_hint());
  CHECK(*d.orient_hint() == "orient rb:c0=- bg:c0=+ rg:c0=+");
  CHECK(parse(serialize(d)).orient_hint() == d.orient_hint());
}
