#include <doctest.h>

#include "corpus.hpp"
#include "kleinsig/bounds.hpp"
#include "kleinsig/foam.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/report.hpp"
#include "kleinsig/transform.hpp"

using namespace kleinsig;

namespace {

KleinInvariants inv(const ColoredDiagram& d) { return compute(d, default_orientation(d)); }

}  // namespace

TEST_CASE("theta unknotting bound") {
  ThetaBound t2 = theta_unknotting_bound(inv(gen_theta_n(2).d));
  CHECK(t2.uY == 3);
  CHECK(t2.u == 3);
  ThetaBound t3 = theta_unknotting_bound(inv(gen_theta_n(3).d));
  CHECK(t3.uY == Rational(9, 2));
  CHECK(t3.u == 5);
  ThetaBound t0 = theta_unknotting_bound(inv(gen_trivial_theta()));
  CHECK(t0.uY == 0);
  CHECK(t0.u == 0);
  CHECK_THROWS_AS(theta_unknotting_bound(inv(gen_tetrahedron())), BoundsError);
}

TEST_CASE("Gordian bound examples") {
  KleinInvariants t0 = inv(gen_trivial_theta()), t2 = inv(gen_theta_n(2).d), t3 = inv(gen_theta_n(3).d);
  CHECK(gordian_lower_bound(t2, t0) == 3);
  CHECK(gordian_lower_bound(t0, t2) == 3);
  CHECK(gordian_lower_bound(t3, t2) == Rational(3, 2));
  CHECK(gordian_lower_bound(t2, t2) == 0);
  CHECK_THROWS_AS(gordian_lower_bound(t0, inv(gen_tetrahedron())), BoundsError);
  CHECK_THROWS_AS(gordian_lower_bound(t0, inv(generate("theta-kink", {}).d)), BoundsError);
}

TEST_CASE("self distance is zero on every corpus graph") {
  for (const auto& e : generator_corpus()) {
    CAPTURE(e.name);
    KleinInvariants v = inv(e.d);
    CHECK(gordian_lower_bound(v, v) == 0);
    BoundsReport r = chain_report(v, v, cobordism_ledger(e.d, {}));
    CHECK(r.cost == 0);
    CHECK_FALSE(r.violation);
  }
}

TEST_CASE("with three bicolored components both forms agree") {
  for (const auto& e : generator_corpus()) {
    KleinInvariants v = inv(e.d);
    if (v.mu != 3) continue;
    CAPTURE(e.name);
    CHECK(gammasig_chi_upper(v) == gammasig_chi_upper_beta_form(v));
    KleinInvariants t0 = inv(gen_trivial_theta());
    if (v.V == 2) CHECK(chain_left(v, t0) == chain_left_beta_form(v, t0));
  }
}

TEST_CASE("beta forms fail once mu > 3") {
  // A graph against itself: zero distance, yet the beta-form left side is positive.
  KleinInvariants torus = inv(gen_torus2k(1));
  REQUIRE(torus.mu == 6);
  CHECK(chain_left_beta_form(torus, torus) > 0);
  CHECK(chain_left(torus, torus) <= 0);
  // Two split trivial thetas bound two disjoint cones, chi_orb = 1/2, with no seam vertices.
  ColoredDiagram two = generate("two-theta", {}).d;
  KleinInvariants v = inv(two);
  REQUIRE(v.sv == 0);
  FoamDescriptor cones = cone_on_trivial_theta();
  Rational realized = 2 * chi_orb(cones);
  CHECK(realized == Rational(1, 2));
  CHECK(gammasig_chi_upper_beta_form(v) < realized);
  CHECK(gammasig_chi_upper(v) >= realized);
}

TEST_CASE("signature bound on chi_orb: examples") {
  CHECK(gammasig_chi_upper(inv(gen_trivial_theta())) == Rational(1, 4));
  CHECK(gammasig_chi_upper(inv(gen_theta_n(2).d)) == Rational(-11, 4));
  KleinInvariants tet = inv(gen_tetrahedron());
  REQUIRE(std::abs(tet.sv) == 1);
  CHECK(gammasig_chi_upper(tet) == Rational(1, 4));
}

TEST_CASE("constituent bound") {
  CHECK(constituent_bound(inv(gen_theta_n(2).d)) == 2);
  CHECK(constituent_bound(inv(gen_theta_n(3).d)) == 3);
  CHECK(constituent_bound(inv(gen_trivial_theta())) == 0);
  CHECK_THROWS_AS(constituent_bound(inv(generate("two-theta", {}).d)), BoundsError);
  for (int n = 2; n <= 6; ++n) {
    KleinInvariants t = inv(gen_theta_n(n).d);
    CHECK(theta_unknotting_bound(t).u > constituent_bound(t));
  }
}

TEST_CASE("theta_n chain is sharp") {
  KleinInvariants t0 = inv(gen_trivial_theta());
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    Generated g = gen_theta_n(n);
    LedgerReport ledger = cobordism_ledger(g.d, *g.script);
    BoundsReport r = chain_report(inv(g.d), t0, ledger);
    CHECK(r.gordian == Rational(3 * n, 2));
    CHECK(*r.cost == Rational(3 * n, 2));
    CHECK(*r.gap == 0);
    CHECK_FALSE(r.violation);
    REQUIRE(r.theta);
    CHECK(r.theta->uY == Rational(3 * n, 2));
    Window w = theta_n_window(n);
    CHECK(w.lo == (3 * n + 1) / 2);
    CHECK(w.hi == 2 * n);
  }
}

TEST_CASE("a script cheaper than the bound is reported as a violation") {
  Generated g = gen_theta_n(2);
  ChangeScript cheap;
  cheap.steps.push_back(g.script->steps.front());
  LedgerReport ledger = cobordism_ledger(g.d, cheap);
  BoundsReport r = chain_report(inv(g.d), inv(gen_trivial_theta()), ledger);
  CHECK(r.violation);
  CHECK(*r.gap < 0);
}

TEST_CASE("chain lines") {
  KleinInvariants t2 = inv(gen_theta_n(2).d), t0 = inv(gen_trivial_theta());
  BoundsReport r = chain_report(t2, t0, std::nullopt);
  CHECK(r.left == 12);
  REQUIRE(r.chain.size() >= 3);
  // chi_orb_4 of the sum is at most (5 - 2V - left)/4
  bool found = false;
  for (const auto& c : r.chain)
    if (c.value == Rational(5 - 4 - 12, 4)) found = true;
  CHECK(found);
  Json j = to_json(r);
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["gordian_bound"]["num"] == 3);
  CHECK(j["gordian_bound"]["den"] == 1);
  CHECK(j.dump() == to_json(chain_report(t2, t0, std::nullopt)).dump());
}

TEST_CASE("realized slice foams respect the upper bounds") {
  // a theta with a script to the trivial theta, capped with the cone
  for (const auto& e : generator_corpus()) {
    if (!e.script) continue;
    CAPTURE(e.name);
    KleinInvariants v = inv(e.d);
    LedgerReport ledger = cobordism_ledger(e.d, *e.script);
    Rational slice = ledger.chi_orb + chi_orb(cone_on_trivial_theta()) + Rational(v.V, 2);
    CHECK(slice <= gammasig_chi_upper(v));
    CHECK(slice <= slice_chi_upper_bound(v, v.knot_free));
  }
}
