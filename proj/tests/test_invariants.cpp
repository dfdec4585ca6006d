#include <doctest.h>

#include "corpus.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/report.hpp"
#include "kleinsig/transform.hpp"

using namespace kleinsig;

TEST_CASE("trivial theta invariants") {
  ColoredDiagram d = gen_trivial_theta();
  for (const auto& t : enumerate_orientations(d)) {
    KleinInvariants v = compute(d, t);
    CHECK(v.V == 2);
    CHECK(v.mu == 3);
    CHECK(v.lambda == 0);
    CHECK(v.sigma == 0);
    CHECK(v.zeta == 0);
    CHECK(v.beta == 0);
    CHECK(v.sv == 0);
    CHECK(v.hamiltonian);
    CHECK(v.knot_free);
  }
}

TEST_CASE("theta_n: signature 6n, constituents T(2,2n+1)") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    ColoredDiagram d = gen_theta_n(n).d;
    SweepResult s = orientation_sweep(d);
    REQUIRE(s.rows.size() == 8);
    CHECK(s.sigma_constant);
    CHECK(s.min_abs_sigma == 6 * n);
    CHECK(s.max_abs_sigma == 6 * n);
    for (const auto& row : s.rows)
      for (const auto& b : row.inv.pairs) {
        CHECK(b.mu == 1);
        CHECK(std::abs(b.sigma) == 2 * n);
      }
  }
}

TEST_CASE("Kinoshita-Wolcott graphs are invisible to the signature") {
  for (auto [p, q, r] : {std::array{1, 1, 1}, std::array{1, 1, 3}, std::array{1, 3, 5}, std::array{0, 0, 0}}) {
    CAPTURE(p);
    CAPTURE(q);
    CAPTURE(r);
    ColoredDiagram d = gen_kinoshita(p, q, r);
    for (const auto& row : orientation_sweep(d).rows) {
      CHECK(row.inv.sigma == 0);
      for (const auto& b : row.inv.pairs) {
        CHECK(b.sigma == 0);
        CHECK(b.mu == 1);
      }
    }
  }
}

TEST_CASE("bundle consistency over the corpus") {
  for (const auto& e : generator_corpus()) {
    if (default_orientation(e.d).bit_count() > 8) continue;
    CAPTURE(e.name);
    for (const auto& row : orientation_sweep(e.d).rows) {
      const KleinInvariants& v = row.inv;
      CHECK(v.zeta == v.sigma + v.lambda);
      CHECK(v.beta >= 0);
      CHECK(v.beta <= v.mu - 3);
      int mu = 0, beta = 0, sigma = 0, lambda = 0;
      for (ColorPair p : kPairs) {
        mu += v.pairs[index(p)].mu;
        beta += v.pairs[index(p)].beta;
        sigma += v.pairs[index(p)].sigma;
        lambda += v.pair_lambda[index(p)];
      }
      CHECK(mu == v.mu);
      CHECK(beta == v.beta);
      CHECK(sigma == v.sigma);
      CHECK(lambda == v.lambda);
      if (v.hamiltonian) {
        CHECK(v.lambda == 0);
        CHECK(v.beta == 0);
        CHECK(v.mu == 3);
      }
    }
  }
}

TEST_CASE("3-Hamiltonian graphs have one signature for all orientations") {
  for (const auto& e : generator_corpus()) {
    if (!component_count(e.d).hamiltonian) continue;
    CAPTURE(e.name);
    CHECK(orientation_sweep(e.d).sigma_constant);
  }
  SweepResult t3 = orientation_sweep(gen_theta_n(3).d);
  CHECK(t3.min_abs_sigma == 18);
}

TEST_CASE("mirror and reversal") {
  for (const auto& e : generator_corpus()) {
    if (default_orientation(e.d).bit_count() > 6) continue;
    CAPTURE(e.name);
    for (const auto& t : enumerate_orientations(e.d)) {
      KleinInvariants a = compute(e.d, t);
      Transformed m = mirror(e.d, t);
      KleinInvariants b = compute(m.d, *m.t);
      CHECK(b.sigma == -a.sigma);
      CHECK(b.lambda == -a.lambda);
      CHECK(b.mu == a.mu);
      CHECK(b.beta == a.beta);
      KleinInvariants r = compute(e.d, reverse(t));
      CHECK(r.sigma == a.sigma);
      CHECK(r.lambda == a.lambda);
      CHECK(r.sv == -a.sv);
    }
  }
}

TEST_CASE("cache does not change results") {
  ColoredDiagram d = generate("torus2k", {2}).d;
  SignatureCache fresh;
  for (const auto& t : enumerate_orientations(d)) {
    KleinInvariants a = compute(d, t, nullptr);
    KleinInvariants b = compute(d, t, &fresh);
    KleinInvariants c = compute(d, t, &fresh);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_json(b).dump() == to_json(c).dump());
  }
  CHECK(fresh.size() > 0);
  fresh.clear();
  CHECK(fresh.size() == 0);
}

TEST_CASE("sweep output is the same for any thread count") {
  ColoredDiagram d = generate("two-theta", {}).d;
  SignatureCache c1, c2;
  std::string one = to_json(orientation_sweep(d, 1, &c1)).dump();
  std::string many = to_json(orientation_sweep(d, 8, &c2)).dump();
  CHECK(one == many);
  CHECK(one == to_json(orientation_sweep(d, 3, nullptr)).dump());
}

TEST_CASE("report JSON is versioned and exact") {
  Json j = to_json(orientation_sweep(gen_theta_n(2).d));
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["rows"].size() == 8);
  CHECK(j["rows"][0]["pairs"]["rb"]["mu"] == 1);
  Json q = rational_json(Rational(9, 2));
  CHECK(q["num"] == 9);
  CHECK(q["den"] == 2);
  CHECK(rational_text(Rational(9, 2)) == "9/2");
  CHECK(rational_text(Rational(-3)) == "-3");
}

TEST_CASE("table rendering aligns columns") {
  std::string t = render_table({{"a", "bb"}, {"ccc", "1"}}, false);
  CHECK(t == "a    bb\nccc   1\n");
  CHECK(render_table({{"x"}}, true).find("\033[1m") != std::string::npos);
}
