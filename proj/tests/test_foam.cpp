#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "kleinsig/foam.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/invariants.hpp"

using namespace kleinsig;

namespace {

ChangeScript random_script(const ColoredDiagram& d, std::mt19937_64& rng, int len) {
  std::vector<std::vector<int>> by_color(3);
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) by_color[index(d.edges()[e].color)].push_back(e);
  std::uniform_int_distribution<int> coin(0, 1), color(0, 2);
  auto pick = [&](Color c) {
    const auto& v = by_color[index(c)];
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  ChangeScript s;
  for (int i = 0; i < len; ++i) {
    ChangeStep st;
    Color c = kColors[color(rng)];
    st.c1 = st.c2 = c;
    if (coin(rng)) {
      st.kind = StepKind::Mixed;
      st.c2 = kColors[(index(c) + 1 + coin(rng)) % 3];
    }
    st.e1 = pick(st.c1);
    st.e2 = pick(st.c2);
    s.steps.push_back(st);
  }
  return s;
}

}  // namespace

TEST_CASE("theta times interval") {
  FoamDescriptor f = identity_cobordism(gen_trivial_theta());
  f.validate();
  CHECK(f.facets.size() == 3);
  CHECK(f.seam_arcs == 2);
  CHECK(f.boundary_vertex_total == 4);
  CHECK(chi_orb(f) == -1);
  CHECK(chiorb_identity_check(f));
}

TEST_CASE("perturbed bicolored euler breaks the identity") {
  FoamDescriptor f = identity_cobordism(gen_trivial_theta());
  f.bicolored_component_eulers[0][0] += 1;
  CHECK_FALSE(chiorb_identity_check(f));
}

TEST_CASE("cone on the trivial theta") {
  FoamDescriptor f = cone_on_trivial_theta();
  f.validate();
  CHECK(f.facets.size() == 3);
  CHECK(f.seam_arcs == 1);
  CHECK(f.boundary_vertex_total == 2);
  // three disks meeting along one arc: chi(F) = 1 and chi(s) = 1
  CHECK(f.euler() == 1);
  CHECK(f.seam_euler() == 1);
  CHECK(chi_orb(f) == Rational(1, 4));
  CHECK(chiorb_identity_check(f));
  // the slice bound for the trivial theta is attained by the cone
  CHECK(chi_orb(f) == slice_chi_upper_bound(compute(gen_trivial_theta(), default_orientation(gen_trivial_theta())), true));
}

TEST_CASE("cone on the tetrahedron has one seam vertex") {
  FoamDescriptor f = cone_on_tetrahedron();
  f.validate();
  CHECK(f.seam_vertices == 1);
  CHECK(f.boundary_vertex_total == 4);
  CHECK_THROWS_AS(chiorb_identity_check(f), FoamError);
}

TEST_CASE("bubbling adds one to chi_orb") {
  for (FoamDescriptor f : {identity_cobordism(gen_trivial_theta()), cone_on_trivial_theta(), cone_on_tetrahedron(),
                           identity_cobordism(gen_tetrahedron())}) {
    FoamDescriptor b = bubble(f);
    b.validate();
    CHECK(chi_orb(b) == chi_orb(f) + 1);
    CHECK(b.seam_vertices == f.seam_vertices + 2);
    CHECK(chi_orb(bubble(b)) == chi_orb(f) + 2);
  }
}

TEST_CASE("validate rejects inconsistent seam counts") {
  FoamDescriptor f = identity_cobordism(gen_trivial_theta());
  f.seam_arcs += 1;
  CHECK_THROWS_AS(f.validate(), FoamError);
}

TEST_CASE("seam graph edge count") {
  for (FoamDescriptor f : {cone_on_tetrahedron(), bubble(cone_on_trivial_theta()), identity_cobordism(gen_prism())}) {
    CHECK(2 * f.seam_arcs == f.boundary_vertex_total + 4 * f.seam_vertices);
    if (f.seam_vertices == 0) CHECK(2 * f.seam_euler() == f.boundary_vertex_total);
  }
}

TEST_CASE("theta_2 and theta_3 scripts") {
  Generated t2 = gen_theta_n(2);
  REQUIRE(t2.script);
  LedgerReport r2 = cobordism_ledger(t2.d, *t2.script);
  CHECK(r2.same == 2);
  CHECK(r2.mixed == 2);
  CHECK(r2.cost == 3);
  CHECK(r2.chi_orb == -4);
  CHECK(r2.closed_form == -4);
  CHECK(chiorb_identity_check(r2.foam));

  Generated t3 = gen_theta_n(3);
  LedgerReport r3 = cobordism_ledger(t3.d, *t3.script);
  CHECK(r3.cost == Rational(9, 2));
  CHECK(r3.chi_orb == Rational(-11, 2));
}

TEST_CASE("script files on disk match the generator") {
  ChangeScript s = parse_script_file(KLEINSIG_TEST_DATA "/theta2.script");
  CHECK(format_script(s) == format_script(*gen_theta_n(2).script));
}

TEST_CASE("empty script is the identity cobordism") {
  ColoredDiagram d = gen_trivial_theta();
  LedgerReport r = cobordism_ledger(d, {});
  CHECK(r.cost == 0);
  CHECK(r.chi_orb == -1);
  CHECK(chi_orb(identity_cobordism(d)) == -1);
}

TEST_CASE("script syntax") {
  ChangeScript s = parse_script("# two steps\nsame r e0 e0\n\nmixed b g 1 0  # trailing\norient rb:c0=-\n");
  REQUIRE(s.steps.size() == 2);
  CHECK(s.steps[0].kind == StepKind::Same);
  CHECK(s.steps[0].e1 == 0);
  CHECK(s.steps[1].kind == StepKind::Mixed);
  CHECK(s.steps[1].c1 == Color::b);
  CHECK(s.steps[1].c2 == Color::g);
  CHECK(s.steps[1].line == 4);
  REQUIRE(s.orient);
  CHECK(parse_script(format_script(s)).steps.size() == 2);
  try {
    parse_script("same r 0 0\nmixed r r 0 1\n");
    FAIL("accepted");
  } catch (const ScriptError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_script("swap r 0 0\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("same r 0\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("same q 0 0\n"), ScriptError);
  CHECK_THROWS_AS(parse_script("same r -1 0\n"), ScriptError);
}

TEST_CASE("scripts are checked against the diagram") {
  ColoredDiagram d = gen_trivial_theta();
  CHECK_NOTHROW(check_script(d, parse_script("same r 0 0\n")));
  CHECK_THROWS_AS(check_script(d, parse_script("same r 5 5\n")), ScriptError);
  CHECK_THROWS_AS(check_script(d, parse_script("same g 0 0\n")), ScriptError);  // edge 0 is red
  CHECK_THROWS_AS(cobordism_ledger(d, parse_script("same g 0 0\n")), ScriptError);
}

TEST_CASE("illegal same steps become two mixed steps") {
  ColoredDiagram d = gen_tetrahedron();
  // find two red edges of opposite sign under some orientation
  bool found = false;
  for (const auto& t : enumerate_orientations(d)) {
    auto dbl = double_orientations(d, t);
    std::vector<int> red;
    for (int e = 0; e < static_cast<int>(d.edges().size()); ++e)
      if (d.edges()[e].color == Color::r) red.push_back(e);
    REQUIRE(red.size() == 2);
    if (dbl[red[0]].sign == dbl[red[1]].sign) continue;
    found = true;
    ChangeScript s;
    s.steps.push_back({StepKind::Same, Color::r, Color::r, red[0], red[1], 1});
    LedgerReport r = cobordism_ledger(d, s, t);
    CHECK(r.same == 0);
    CHECK(r.mixed == 2);
    CHECK(r.cost == 1);
    CHECK(r.warnings.size() == 1);
    CHECK(r.chi_orb == r.closed_form);
    // without an orientation the step is taken as written
    LedgerReport plain = cobordism_ledger(d, s);
    CHECK(plain.same == 1);
    CHECK(plain.warnings.empty());
  }
  CHECK(found);
}

TEST_CASE("random scripts: closed form, identity and composition") {
  std::mt19937_64 rng(42);
  for (const auto& entry : generator_corpus()) {
    if (entry.d.vertex_count() == 0) continue;
    for (int trial = 0; trial < 6; ++trial) {
      CAPTURE(entry.name);
      ChangeScript a = random_script(entry.d, rng, trial + 1);
      ChangeScript b = random_script(entry.d, rng, 3);
      LedgerReport ra = cobordism_ledger(entry.d, a), rb = cobordism_ledger(entry.d, b);
      CHECK(ra.chi_orb == ra.closed_form);
      CHECK(-ra.chi_orb == ra.cost + Rational(entry.d.vertex_count(), 2));
      CHECK(chiorb_identity_check(ra.foam));
      ra.foam.validate();
      ChangeScript ab = a;
      ab.steps.insert(ab.steps.end(), b.steps.begin(), b.steps.end());
      LedgerReport rab = cobordism_ledger(entry.d, ab);
      CHECK(rab.cost == ra.cost + rb.cost);
      CHECK(rab.chi_orb == ra.chi_orb + rb.chi_orb + Rational(entry.d.vertex_count(), 2));
    }
  }
}

TEST_CASE("slice and seamed upper bounds") {
  auto inv = [](const ColoredDiagram& d) { return compute(d, default_orientation(d)); };
  CHECK(slice_chi_upper_bound(inv(gen_trivial_theta()), true) == Rational(1, 4));
  CHECK(slice_chi_upper_bound(inv(gen_tetrahedron()), true) == Rational(-1, 4));
  ColoredDiagram two = generate("two-theta", {}).d;
  KleinInvariants t2 = inv(two);
  REQUIRE(t2.V == 4);
  REQUIRE(t2.mu == 6);
  CHECK(slice_chi_upper_bound(t2, true) == Rational(1, 2));
  CHECK(seamed_cobordism_upper_bound(inv(gen_trivial_theta()), inv(gen_trivial_theta())) == Rational(1, 2));
  CHECK(seamed_cobordism_upper_bound(inv(gen_tetrahedron()), inv(gen_tetrahedron())) == Rational(-1, 2));
  CHECK_THROWS_AS(seamed_cobordism_upper_bound(inv(gen_trivial_theta()), inv(gen_tetrahedron())), FoamError);
}
