#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/transform.hpp"
#include "oracle.hpp"

using namespace kleinsig;

namespace {

KleinInvariants inv(const Transformed& x) { return compute(x.d, *x.t); }

int first_edge_of(const ColoredDiagram& d, Color c) {
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e)
    if (d.edges()[e].color == c && !d.edges()[e].closed()) return e;
  return -1;
}

// a vertex of d2 whose type is opposite to vertex v1 of d1
std::optional<int> opposite_vertex(const ColoredDiagram& d1, const TotalOrientation& t1, int v1,
                                   const ColoredDiagram& d2, const TotalOrientation& t2) {
  int code1 = -1;
  for (const auto& vt : vertex_types(d1, t1))
    if (vt.vertex == v1) code1 = vt.code;
  for (const auto& vt : vertex_types(d2, t2))
    if (vt.code == (~code1 & 7)) return vt.vertex;
  return std::nullopt;
}

Transformed minus_mirror(const ColoredDiagram& d, const TotalOrientation& t) {
  Transformed m = mirror(d, t);
  m.t = reverse(*m.t);
  return m;
}

std::vector<const CorpusEntry*> summable() {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : generator_corpus())
    if (e.d.vertex_count() > 0 && default_orientation(e.d).bit_count() <= 6) out.push_back(&e);
  return out;
}

}  // namespace

TEST_CASE("mirror twice turns every crossing by half, four times is the identity") {
  for (const auto& e : generator_corpus()) {
    Transformed once = mirror(e.d);
    Transformed twice = mirror(once.d);
    CHECK(twice.d == half_turn_crossings(e.d));
    CHECK(mirror(mirror(twice.d).d).d == e.d);
    CHECK(half_turn_crossings(half_turn_crossings(e.d)) == e.d);
    // invariants cannot tell the half-turned crossings apart
    if (default_orientation(e.d).bit_count() <= 6) {
      TotalOrientation t = default_orientation(e.d);
      Transformed m2 = mirror(mirror(e.d, t).d, mirror(e.d, t).t);
      CHECK(inv(m2).sigma == compute(e.d, t).sigma);
    }
  }
}

TEST_CASE("mirror negates sigma and lambda on theta_2") {
  ColoredDiagram d = gen_theta_n(2).d;
  TotalOrientation t = default_orientation(d);
  KleinInvariants a = compute(d, t), b = inv(mirror(d, t));
  CHECK(b.sigma == -a.sigma);
  CHECK(std::abs(b.sigma) == 12);
  CHECK(b.lambda == -a.lambda);
  CHECK(b.mu == a.mu);
  CHECK(b.beta == a.beta);
}

TEST_CASE("flip is an isotopy") {
  for (const auto* e : summable())
    for (const auto& t : enumerate_orientations(e->d)) {
      CAPTURE(e->name);
      KleinInvariants a = compute(e->d, t), b = inv(flip(e->d, t));
      CHECK(a.sigma == b.sigma);
      CHECK(a.lambda == b.lambda);
      CHECK(a.beta == b.beta);
      CHECK(a.sv == b.sv);
    }
}

TEST_CASE("edge sum of two trivial thetas") {
  ColoredDiagram t = gen_trivial_theta();
  int r = first_edge_of(t, Color::r);
  Transformed s = edge_sum(t, r, t, r);
  CHECK(s.d.vertex_count() == 4);
  KleinInvariants v = compute(s.d, default_orientation(s.d));
  CHECK(v.mu == 4);
  CHECK(v.beta == 1);
  CHECK(v.sigma == 0);
  CHECK_THROWS_AS(edge_sum(t, r, t, first_edge_of(t, Color::g)), TransformError);
}

TEST_CASE("edge sums: mu, beta and sv") {
  std::mt19937_64 rng(11);
  auto pool = summable();
  int done = 0;
  for (int trial = 0; trial < 60 && done < 20; ++trial) {
    const auto* a = pool[rng() % pool.size()];
    const auto* b = pool[rng() % pool.size()];
    Color c = kColors[rng() % 3];
    int e1 = first_edge_of(a->d, c), e2 = first_edge_of(b->d, c);
    if (e1 < 0 || e2 < 0) continue;
    auto oa = enumerate_orientations(a->d), ob = enumerate_orientations(b->d);
    TotalOrientation t1 = oa[rng() % oa.size()], t2 = ob[rng() % ob.size()];
    auto s1 = double_orientations(a->d, t1)[e1].sign, s2 = double_orientations(b->d, t2)[e2].sign;
    CAPTURE(a->name);
    CAPTURE(b->name);
    if (s1 != s2) {
      CHECK_THROWS_AS(edge_sum(a->d, e1, b->d, e2, t1, t2), OrientationError);
      continue;
    }
    Transformed s = edge_sum(a->d, e1, b->d, e2, t1, t2);
    KleinInvariants x = compute(a->d, t1), y = compute(b->d, t2), z = inv(s);
    CHECK(z.mu == x.mu + y.mu - 2);
    CHECK(z.beta == x.beta + y.beta + 1);
    CHECK(z.sv == x.sv + y.sv);
    CHECK(oracle::planar(s.d));
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("vertex sums") {
  ColoredDiagram t0 = gen_trivial_theta();
  TotalOrientation o0 = default_orientation(t0);
  auto v0 = vertex_nodes(t0);
  auto opp = opposite_vertex(t0, o0, v0[0], t0, o0);
  REQUIRE(opp);
  Transformed s = vertex_sum(t0, v0[0], t0, *opp, o0, o0);
  KleinInvariants k = inv(s);
  CHECK(k.sigma == 0);
  CHECK(k.mu == 3);
  CHECK(k.V == 2);

  ColoredDiagram t2 = gen_theta_n(2).d;
  TotalOrientation o2 = default_orientation(t2);
  Transformed mm = minus_mirror(t2, o2);
  int v = vertex_nodes(t2)[0];
  auto w = opposite_vertex(t2, o2, v, mm.d, *mm.t);
  REQUIRE(w);
  CHECK(inv(vertex_sum(t2, v, mm.d, *w, o2, mm.t)).sigma == 0);

  bool summed = false;
  for (const auto& ot : enumerate_orientations(t0)) {
    auto w0 = opposite_vertex(t2, o2, v, t0, ot);
    if (!w0) continue;
    CHECK(inv(vertex_sum(t2, v, t0, *w0, o2, ot)).sigma == compute(t2, o2).sigma);
    summed = true;
  }
  CHECK(summed);

  // same-type vertices cannot be summed
  auto same = vertex_types(t0, o0)[0];
  CHECK_THROWS(vertex_sum(t0, same.vertex, t0, same.vertex, o0, o0));
}

TEST_CASE("vertex sums: sigma, sv, beta additive and mu drops by three") {
  std::mt19937_64 rng(17);
  auto pool = summable();
  int done = 0;
  for (int trial = 0; trial < 80 && done < 20; ++trial) {
    const auto* a = pool[rng() % pool.size()];
    const auto* b = pool[rng() % pool.size()];
    auto oa = enumerate_orientations(a->d), ob = enumerate_orientations(b->d);
    TotalOrientation t1 = oa[rng() % oa.size()], t2 = ob[rng() % ob.size()];
    auto vs = vertex_nodes(a->d);
    int v1 = vs[rng() % vs.size()];
    auto v2 = opposite_vertex(a->d, t1, v1, b->d, t2);
    if (!v2) continue;
    CAPTURE(a->name);
    CAPTURE(b->name);
    Transformed s = vertex_sum(a->d, v1, b->d, *v2, t1, t2);
    KleinInvariants x = compute(a->d, t1), y = compute(b->d, t2), z = inv(s);
    CHECK(z.sigma == x.sigma + y.sigma);
    CHECK(z.sv == x.sv + y.sv);
    CHECK(z.beta == x.beta + y.beta);
    CHECK(z.mu == x.mu + y.mu - 3);
    CHECK(z.V == x.V + y.V - 2);
    CHECK(oracle::planar(s.d));
    // difference of signatures through the sum with the reversed mirror
    Transformed mm = minus_mirror(b->d, t2);
    auto w = opposite_vertex(a->d, t1, v1, mm.d, *mm.t);
    if (w) CHECK(inv(vertex_sum(a->d, v1, mm.d, *w, t1, mm.t)).sigma == x.sigma - y.sigma);
    ++done;
  }
  CHECK(done >= 15);
}

TEST_CASE("disjoint union adds everything") {
  ColoredDiagram a = gen_theta_n(1).d, b = gen_tetrahedron();
  Transformed u = disjoint_union(a, b, default_orientation(a), default_orientation(b));
  KleinInvariants x = compute(a, default_orientation(a)), y = compute(b, default_orientation(b)), z = inv(u);
  CHECK(z.mu == x.mu + y.mu);
  CHECK(z.sigma == x.sigma + y.sigma);
  CHECK(z.sv == x.sv + y.sv);
  CHECK(z.V == x.V + y.V);
}

TEST_CASE("generator outputs are valid, planar and round-trip") {
  for (const auto& e : generator_corpus()) {
    CAPTURE(e.name);
    CHECK(oracle::planar(e.d));
    CHECK(parse(serialize(e.d)) == e.d);
    if (e.script) CHECK_NOTHROW(check_script(e.d, *e.script));
  }
  for (const auto& f : generator_families()) {
    std::vector<int> params;
    if (f == "theta-n" || f == "torus2k") params = {2};
    if (f == "kinoshita") params = {1, 2, 3};
    CAPTURE(f);
    Generated g = generate(f, params);
    CHECK(oracle::planar(g.d));
    CHECK(parse(serialize(g.d)) == g.d);
  }
  CHECK_THROWS(generate("no-such-family", {}));
  CHECK_THROWS(generate("theta-n", {0}));
  CHECK_THROWS(generate("kinoshita", {1, 2}));
}

TEST_CASE("generator families") {
  CHECK(gen_trivial_theta().vertex_count() == 2);
  ColoredDiagram tet = gen_tetrahedron();
  CHECK(tet.vertex_count() == 4);
  CHECK(component_count(tet).hamiltonian);
  for (const auto& t : enumerate_orientations(tet))
    for (const auto& b : compute(tet, t).pairs) CHECK(b.sigma == 0);
  ColoredDiagram torus = gen_torus2k(2);
  TotalOrientation t = default_orientation(torus);
  OrientedLinkDiagram rb = oriented_bicolored(torus, t, ColorPair::rb);
  REQUIRE(rb.base.component_count() == 2);
  CHECK(std::abs(linking_number(rb, 0, 1)) == 2);
  for (int n = 1; n <= 4; ++n) {
    Generated g = gen_theta_n(n);
    REQUIRE(g.script);
    int same = 0, mixed = 0;
    for (const auto& s : g.script->steps) (s.kind == StepKind::Same ? same : mixed)++;
    CHECK(same == n);
    CHECK(mixed == n);
  }
  ColoredDiagram k0 = gen_kinoshita(0, 0, 0);
  CHECK(compute(k0, default_orientation(k0)).sigma == 0);
}
