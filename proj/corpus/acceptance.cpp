#include "acceptance.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "kleinsig/bounds.hpp"
#include "kleinsig/braid.hpp"
#include "kleinsig/foam.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/report.hpp"
#include "kleinsig/seifert.hpp"
#include "kleinsig/transform.hpp"
#include "oracle.hpp"

namespace kleinsig {

namespace {

struct Tally {
  int checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    else if (!ok) failures.push_back("");
  }
  CriterionResult result(int id, const std::string& title, const std::string& summary) const {
    CriterionResult r{id, title, failures.empty(), summary, 0};
    if (!failures.empty()) {
      std::ostringstream out;
      out << failures.size() << " of " << checks << " checks failed";
      for (const auto& f : failures)
        if (!f.empty()) out << "; " << f;
      r.detail = out.str();
    }
    return r;
  }
};

std::string q(const Rational& x) { return rational_text(x); }

KleinInvariants inv_default(const ColoredDiagram& d, SignatureCache* cache) {
  return compute(d, default_orientation(d), cache);
}

// theta reproduction shared by criteria 1 and 2
CriterionResult theta_reproduction(int id, int n, int abs_sigma, Rational uY, long u, Rational cost) {
  SignatureCache cache;
  Tally t;
  Generated g = gen_theta_n(n);
  auto sweep = orientation_sweep(g.d, 0, &cache);
  t.expect(sweep.min_abs_sigma == abs_sigma && sweep.max_abs_sigma == abs_sigma,
           "|sigma| range " + std::to_string(sweep.min_abs_sigma) + ".." + std::to_string(sweep.max_abs_sigma));
  KleinInvariants a = sweep.rows.front().inv;
  auto tb = theta_unknotting_bound(a);
  t.expect(tb.uY == uY && tb.u == u, "theta bound (" + q(tb.uY) + ", " + std::to_string(tb.u) + ")");
  auto triv = inv_default(gen_trivial_theta(), &cache);
  auto led = cobordism_ledger(g.d, *g.script);
  auto rep = chain_report(a, triv, led);
  t.expect(rep.cost && *rep.cost == cost, "script cost " + q(led.cost));
  t.expect(rep.gap && *rep.gap == 0, "gap " + (rep.gap ? q(*rep.gap) : std::string("none")));
  t.expect(!rep.violation, "chain violated");
  t.expect(rep.gordian == uY, "gordian bound " + q(rep.gordian));
  std::ostringstream s;
  s << "|sigma| = " << sweep.max_abs_sigma << " on all " << sweep.rows.size() << " orientations, u_Y >= " << q(tb.uY)
    << ", u >= " << tb.u << ", cost " << q(led.cost) << ", gap " << q(*rep.gap);
  return t.result(id, "", s.str());
}

CriterionResult c1() { return theta_reproduction(1, 2, 12, 3, 3, 3); }
CriterionResult c2() { return theta_reproduction(2, 3, 18, Rational(9, 2), 5, Rational(9, 2)); }

CriterionResult c3() {
  SignatureCache cache;
  Tally t;
  auto triv = inv_default(gen_trivial_theta(), &cache);
  for (int n = 1; n <= 4; ++n) {
    Generated g = gen_theta_n(n);
    auto sweep = orientation_sweep(g.d, 0, &cache);
    t.expect(sweep.sigma_constant && sweep.max_abs_sigma == 6 * n,
             "theta_" + std::to_string(n) + " |sigma| " + std::to_string(sweep.max_abs_sigma));
    auto a = sweep.rows.front().inv;
    for (const auto& p : a.pairs) t.expect(p.mu == 1 && std::abs(p.sigma) == 2 * n, "constituent of theta_" + std::to_string(n));
    auto rep = chain_report(a, triv, cobordism_ledger(g.d, *g.script));
    t.expect(theta_unknotting_bound(a).uY == Rational(3 * n, 2), "theta bound for n = " + std::to_string(n));
    t.expect(rep.gordian == Rational(3 * n, 2) && *rep.gap == 0, "chain for n = " + std::to_string(n));
  }
  for (int n = 1; n <= 10; ++n) {
    BraidWord w{2, std::vector<int>(2 * n + 1, 1)};
    SeifertData s = seifert_matrix(w);
    IntMatrix closed = oracle::torus_two_closed_form(n);
    t.expect(s.V == closed && s.r == 1, "Seifert matrix of T(2," + std::to_string(2 * n + 1) + ")");
    auto in = oracle::descartes_inertia(closed + closed.transpose());
    t.expect(in.positive - in.negative == -2 * n, "closed-form signature for n = " + std::to_string(n));
    auto sig = link_signature(braid_closure(w));
    t.expect(std::abs(sig.sigma) == 2 * n && sig.beta == 0, "pipeline |sigma(T(2," + std::to_string(2 * n + 1) + "))|");
  }
  return t.result(3, "", "theta_n |sigma| = 6n and bound 3n/2 for n = 1..4; T(2,2n+1) |sigma| = 2n for n = 1..10");
}

CriterionResult c4() {
  SignatureCache cache;
  Tally t;
  for (auto [p, qq, r] : {std::array{1, 1, 1}, std::array{1, 1, 3}, std::array{1, 3, 5}}) {
    auto d = gen_kinoshita(p, qq, r);
    auto sweep = orientation_sweep(d, 0, &cache);
    for (const auto& row : sweep.rows) {
      t.expect(row.inv.sigma == 0, d.name() + " sigma " + std::to_string(row.inv.sigma));
      for (const auto& b : row.inv.pairs) t.expect(b.mu == 1 && b.sigma == 0, d.name() + " constituent");
    }
  }
  return t.result(4, "", "sigma = 0 and all constituent sigma = 0 for (1,1,1), (1,1,3), (1,3,5)");
}

CriterionResult c5() {
  SignatureCache cache;
  Tally t;
  int graphs = 0, rows = 0;
  for (const auto& e : generator_corpus()) {
    if (default_orientation(e.d).bit_count() > 6) continue;
    ++graphs;
    for (const auto& o : enumerate_orientations(e.d)) {
      ++rows;
      auto a = compute(e.d, o, &cache);
      auto m = mirror(e.d, o);
      auto b = compute(m.d, *m.t, &cache);
      auto c = compute(e.d, reverse(o), &cache);
      std::string at = e.name + " " + format_orientation(o);
      t.expect(b.lambda == -a.lambda && c.lambda == a.lambda, "lambda at " + at);
      t.expect(b.mu == a.mu && c.mu == a.mu, "mu at " + at);
      t.expect(b.beta == a.beta && c.beta == a.beta, "beta at " + at);
      t.expect(b.sigma == -a.sigma && c.sigma == a.sigma, "sigma at " + at);
      t.expect(b.sv == a.sv && c.sv == -a.sv, "sv at " + at);
    }
  }
  return t.result(5, "", std::to_string(graphs) + " graphs, " + std::to_string(rows) + " orientations, " +
                             std::to_string(t.checks) + " checks");
}

// a random orientation of d; with want set, one giving vertex v that code
std::optional<TotalOrientation> pick_orientation(const ColoredDiagram& d, std::mt19937_64& rng,
                                                 const std::function<bool(const TotalOrientation&)>& ok) {
  auto all = enumerate_orientations(d);
  std::shuffle(all.begin(), all.end(), rng);
  for (auto& o : all)
    if (ok(o)) return o;
  return std::nullopt;
}

int vertex_code(const ColoredDiagram& d, const TotalOrientation& t, int v) {
  for (const auto& vt : vertex_types(d, t))
    if (vt.vertex == v) return vt.code;
  return -1;
}

std::vector<ColoredDiagram> sum_pool() {
  std::vector<ColoredDiagram> pool;
  for (const auto& e : generator_corpus())
    if (e.d.vertex_count() > 0 && default_orientation(e.d).bit_count() <= 6) pool.push_back(e.d);
  return pool;
}

CriterionResult c6() {
  SignatureCache cache;
  Tally t;
  std::mt19937_64 rng(20240606);
  auto pool = sum_pool();
  auto pick = [&](std::size_t n) { return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
  int done3 = 0, done2 = 0;
  for (int attempt = 0; attempt < 200 && done3 < 25; ++attempt) {
    const auto& d1 = pool[pick(pool.size())];
    const auto& d2 = pool[pick(pool.size())];
    auto vs1 = vertex_nodes(d1), vs2 = vertex_nodes(d2);
    int v1 = vs1[pick(vs1.size())], v2 = vs2[pick(vs2.size())];
    auto t1 = pick_orientation(d1, rng, [](const TotalOrientation&) { return true; });
    int want = ~vertex_code(d1, *t1, v1) & 7;
    auto t2 = pick_orientation(d2, rng, [&](const TotalOrientation& o) { return vertex_code(d2, o, v2) == want; });
    if (!t2) continue;
    auto s = vertex_sum(d1, v1, d2, v2, t1, t2);
    auto a = compute(d1, *t1, &cache), b = compute(d2, *t2, &cache), c = compute(s.d, *s.t, &cache);
    std::string at = d1.name() + " #3 " + d2.name();
    t.expect(c.sigma == a.sigma + b.sigma, "sigma additive for " + at);
    t.expect(c.sv == a.sv + b.sv, "sv additive for " + at);
    t.expect(c.mu == a.mu + b.mu - 3, "mu for " + at);
    t.expect(c.beta == a.beta + b.beta, "beta for " + at);
    t.expect(c.V == a.V + b.V - 2, "V for " + at);
    ++done3;
  }
  for (int attempt = 0; attempt < 200 && done2 < 25; ++attempt) {
    const auto& d1 = pool[pick(pool.size())];
    const auto& d2 = pool[pick(pool.size())];
    int e1 = pick(d1.edges().size());
    std::vector<int> same;
    for (int e = 0; e < static_cast<int>(d2.edges().size()); ++e)
      if (d2.edges()[e].color == d1.edges()[e1].color) same.push_back(e);
    if (same.empty()) continue;
    int e2 = same[pick(same.size())];
    auto t1 = pick_orientation(d1, rng, [](const TotalOrientation&) { return true; });
    int sign = double_orientations(d1, *t1)[e1].sign;
    auto t2 = pick_orientation(d2, rng,
                               [&](const TotalOrientation& o) { return double_orientations(d2, o)[e2].sign == sign; });
    if (!t2) continue;
    auto s = edge_sum(d1, e1, d2, e2, t1, t2);
    auto a = compute(d1, *t1, &cache), b = compute(d2, *t2, &cache), c = compute(s.d, *s.t, &cache);
    std::string at = d1.name() + " #2 " + d2.name();
    t.expect(c.mu == a.mu + b.mu - 2, "mu for " + at);
    t.expect(c.beta == a.beta + b.beta + 1, "beta for " + at);
    ++done2;
  }
  t.expect(done3 >= 20 && done2 >= 20, "too few compatible pairs");
  return t.result(6, "", std::to_string(done3) + " vertex sums and " + std::to_string(done2) + " edge sums");
}

ChangeScript random_script(const ColoredDiagram& d, std::mt19937_64& rng, int steps) {
  ChangeScript s;
  std::array<std::vector<int>, 3> by_color;
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) by_color[index(d.edges()[e].color)].push_back(e);
  auto any = [&](Color c) {
    const auto& v = by_color[index(c)];
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  for (int i = 0; i < steps; ++i) {
    Color c1 = kColors[rng() % 3];
    ChangeStep st;
    st.line = i + 1;
    if (rng() % 2) {
      st.kind = StepKind::Same;
      st.c1 = st.c2 = c1;
      st.e1 = any(c1);
      st.e2 = any(c1);
    } else {
      Color c2 = kColors[(index(c1) + 1 + rng() % 2) % 3];
      st.kind = StepKind::Mixed;
      st.c1 = c1;
      st.c2 = c2;
      st.e1 = any(c1);
      st.e2 = any(c2);
    }
    s.steps.push_back(st);
  }
  return s;
}

CriterionResult c7() {
  Tally t;
  std::mt19937_64 rng(7);
  const auto& corpus = generator_corpus();
  int seamless = 0, rewritten = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& e = corpus[rng() % corpus.size()];
    int len = static_cast<int>(rng() % 9);
    ChangeScript s = random_script(e.d, rng, len);
    std::optional<TotalOrientation> o;
    if (i % 2) o = orientation_at(e.d, rng() % orientation_count(e.d));
    auto led = cobordism_ledger(e.d, s, o);
    if (!led.warnings.empty()) ++rewritten;
    std::string at = e.name + " script " + std::to_string(i);
    t.expect(led.chi_orb == led.closed_form, "closed form at " + at + ": " + q(led.chi_orb) + " vs " + q(led.closed_form));
    t.expect(-led.chi_orb == led.cost + Rational(led.V, 2), "distance equality at " + at);
    if (led.foam.seam_vertices == 0) {
      ++seamless;
      t.expect(chiorb_identity_check(led.foam), "bicolored identity at " + at);
    }
    // stacking two scripts
    ChangeScript tail = random_script(e.d, rng, static_cast<int>(rng() % 5));
    ChangeScript both = s;
    both.steps.insert(both.steps.end(), tail.steps.begin(), tail.steps.end());
    auto l2 = cobordism_ledger(e.d, tail, o), l12 = cobordism_ledger(e.d, both, o);
    t.expect(l12.chi_orb == led.chi_orb + l2.chi_orb + Rational(e.d.vertex_count(), 2), "composition at " + at);
    t.expect(l12.cost == led.cost + l2.cost, "cost additivity at " + at);
  }
  return t.result(7, "", "200 random scripts (" + std::to_string(seamless) + " seamless, " + std::to_string(rewritten) +
                             " with rewritten same steps)");
}

CriterionResult c8() {
  SignatureCache cache;
  Tally t;
  auto triv_d = gen_trivial_theta();
  auto triv = inv_default(triv_d, &cache);
  int realized = 0;
  for (const auto& e : generator_corpus()) {
    bool small = default_orientation(e.d).bit_count() <= 8;
    auto orients = small ? enumerate_orientations(e.d) : std::vector<TotalOrientation>{default_orientation(e.d)};
    auto id = identity_cobordism(e.d);
    for (const auto& o : orients) {
      auto a = compute(e.d, o, &cache);
      std::string at = e.name + " " + format_orientation(o);
      // the product cobordism from the graph to itself
      t.expect(chi_orb(id) <= seamed_cobordism_upper_bound(a, a), "product cobordism bound at " + at);
      t.expect(gordian_lower_bound(a, a) == 0, "self distance at " + at);
      ++realized;
      if (!e.script) continue;
      auto led = cobordism_ledger(e.d, *e.script);
      t.expect(led.chi_orb <= seamed_cobordism_upper_bound(a, triv), "seamed bound at " + at);
      // stacked onto the cone over the trivial theta: a seamless slice foam
      Rational slice = led.chi_orb + chi_orb(cone_on_trivial_theta()) + Rational(e.d.vertex_count(), 2);
      if (a.sv == 0) {
        t.expect(slice <= gammasig_chi_upper(a), "signature chi bound at " + at + ": " + q(slice) + " vs " +
                                                     q(gammasig_chi_upper(a)));
        t.expect(slice <= slice_chi_upper_bound(a, a.knot_free), "slice bound at " + at);
      }
      auto rep = chain_report(a, triv, led);
      t.expect(!rep.violation, "chain inversion at " + at);
      realized += 2;
    }
  }
  // the cone over the tetrahedral graph has one seam vertex
  auto tet = gen_tetrahedron();
  for (const auto& o : enumerate_orientations(tet)) {
    auto a = compute(tet, o, &cache);
    if (std::abs(a.sv) != 1) continue;
    t.expect(chi_orb(cone_on_tetrahedron()) <= gammasig_chi_upper(a), "tetrahedral cone bound");
    ++realized;
  }
  return t.result(8, "", std::to_string(realized) + " realized foams checked against the upper bounds");
}

BraidWord random_braid(std::mt19937_64& rng) {
  BraidWord w;
  w.strands = 1 + static_cast<int>(rng() % 8);
  if (w.strands == 1) return w;
  int len = static_cast<int>(rng() % 17);
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % (w.strands - 1));
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

CriterionResult c9() {
  Tally t;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    BraidWord w = random_braid(rng);
    BraidWord m = w;
    std::string kind;
    switch (rng() % 3) {
      case 0:
        kind = "cyclic shift";
        if (!m.letters.empty()) std::rotate(m.letters.begin(), m.letters.begin() + 1, m.letters.end());
        break;
      case 1: {
        kind = "conjugation";
        if (m.strands > 1) {
          int g = 1 + static_cast<int>(rng() % (m.strands - 1));
          if (rng() % 2) g = -g;
          m.letters.insert(m.letters.begin(), g);
          m.letters.push_back(-g);
        }
        break;
      }
      default:
        kind = "stabilization";
        m.letters.push_back(rng() % 2 ? m.strands : -m.strands);
        ++m.strands;
    }
    auto a = signature_nullity(seifert_matrix(w), 0, braid_closure(w).base.component_count());
    auto b = signature_nullity(seifert_matrix(m), 0, braid_closure(m).base.component_count());
    auto c = link_signature(braid_closure(m));
    std::string at = kind + " of " + to_string(w);
    t.expect(a.sigma == b.sigma && a.beta == b.beta, "braid word invariants under " + at);
    t.expect(c.sigma == a.sigma && c.beta == a.beta, "diagram pipeline under " + at);
  }
  std::mt19937_64 mr(12);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(mr() % 12);
    IntMatrix m(n);
    if (i % 3 == 0) {
      // low rank: B^T D B
      int r = static_cast<int>(mr() % n);
      std::vector<std::vector<long>> B(r, std::vector<long>(n));
      std::vector<long> D(r);
      for (int k = 0; k < r; ++k) {
        D[k] = mr() % 2 ? 1 : -1;
        for (auto& x : B[k]) x = static_cast<long>(mr() % 5) - 2;
      }
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int k = 0; k < r; ++k) m(a, b) += B[k][a] * D[k] * B[k][b];
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) m(a, b) = m(b, a) = static_cast<long>(mr() % 7) - 3;
    }
    auto got = symmetric_signature(m, i % 2 ? &mr : nullptr);
    auto want = oracle::descartes_inertia(m);
    t.expect(got.positive == want.positive && got.negative == want.negative && got.zero == want.zero,
             "matrix " + std::to_string(i) + " of size " + std::to_string(n));
  }
  return t.result(9, "", "200 Markov moves and 100 random symmetric matrices");
}

template <class F>
CriterionResult timed(F f, double limit) {
  auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = f();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && r.seconds > limit) {
    r.pass = false;
    r.detail += "; took " + std::to_string(r.seconds) + " s, limit " + std::to_string(limit) + " s";
  }
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "theta_2 reproduction", [] { return timed(c1, 1.0); }},
      {2, "theta_3 reproduction", [] { return timed(c2, 1.0); }},
      {3, "theta_n family law", [] { return timed(c3, 5.0); }},
      {4, "Kinoshita-Wolcott blindness", [] { return timed(c4, 2.0); }},
      {5, "mirror and reversal tables", [] { return timed(c5, 0); }},
      {6, "connected sum laws", [] { return timed(c6, 0); }},
      {7, "foam arithmetic", [] { return timed(c7, 0); }},
      {8, "bound consistency", [] { return timed(c8, 0); }},
      {9, "signature engine soundness", [] { return timed(c9, 0); }},
  };
  return all;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    CriterionResult r = c.run();
    r.id = c.id;
    r.title = c.title;
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): " << r.detail;
  char buf[32];
  std::snprintf(buf, sizeof buf, " [%.3f s]", r.seconds);
  out << buf;
  return out.str();
}

}  // namespace kleinsig
