#include "kleinsig/foam.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "kleinsig/linkops.hpp"

namespace kleinsig {

long FoamDescriptor::euler() const {
  long s = seam_euler();
  for (const auto& f : facets) s += f.euler;
  return s;
}

void FoamDescriptor::validate() const {
  if (seam_circles < 0 || seam_arcs < 0 || seam_vertices < 0 || boundary_vertex_total < 0)
    throw FoamError("negative cell count");
  // seam vertices are 4-valent, boundary vertices are arc endpoints
  if (2 * seam_arcs != boundary_vertex_total + 4 * seam_vertices)
    throw FoamError("seam graph has " + std::to_string(seam_arcs) + " arcs, expected (" +
                    std::to_string(boundary_vertex_total) + " + 4*" + std::to_string(seam_vertices) + ")/2");
}

Rational chi_orb(const FoamDescriptor& f) {
  return Rational(f.euler(), 2) - Rational(f.seam_euler(), 4);
}

bool chiorb_identity_check(const FoamDescriptor& f) {
  if (f.seam_vertices != 0) throw FoamError("identity check needs a foam without seam vertices");
  long sum = 0;
  for (const auto& v : f.bicolored_component_eulers)
    for (long x : v) sum += x;
  return 4 * chi_orb(f) == Rational(sum - f.boundary_vertex_total);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns the surviving root
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return a;
  }
};

// Cobordism state while stacking elementary pieces onto d x I.
class Ledger {
 public:
  explicit Ledger(const ColoredDiagram& d) : d_(d) {
    const auto& edges = d.edges();
    for (const auto& e : edges) {
      facet_color_.push_back(e.color);
      facet_euler_.push_back(e.closed() ? 0 : -1);
      merged_.add();
      for (auto& uf : pair_uf_) uf.add();
    }
    for (ColorPair p : kPairs) {
      auto& uf = pair_uf_[index(p)];
      for (const auto& comp : trace_bicolored(d, p)) {
        int first = d.edge_of(comp.steps.front().arc);
        for (const auto& st : comp.steps) uf.unite(first, d.edge_of(st.arc));
      }
      for (int f = 0; f < static_cast<int>(edges.size()); ++f)
        if (contains(p, edges[f].color) && uf.find(f) == f) comp_euler_[index(p)][f] = 0;
    }
  }

  int facet_of_edge(int e) { return merged_.find(e); }

  void same(Color c, int e1, int e2) {
    int a = facet_of_edge(e1), b = facet_of_edge(e2);
    int root = merged_.unite(a, b);
    long sum = a == b ? facet_euler_[a] : facet_euler_[a] + facet_euler_[b];
    facet_euler_[root] = sum - 2;
    for (ColorPair p : kPairs)
      if (contains(p, c)) merge_components(p, a, b, -2);
  }

  void mixed(Color ci, Color cj, int ei, int ej) {
    int fi = facet_of_edge(ei), fj = facet_of_edge(ej);
    Color ck = complement(pair_of(ci, cj));
    ++seam_circles_;
    facet_euler_[fi] -= 1;
    facet_euler_[fj] -= 1;
    int disk = merged_.add();
    for (auto& uf : pair_uf_) uf.add();
    facet_color_.push_back(ck);
    facet_euler_.push_back(1);
    merge_components(pair_of(ci, cj), fi, fj, -2);
    // the k-disk caps the new seam circle inside the ik and jk surfaces
    attach(pair_of(ci, ck), fi, disk);
    attach(pair_of(cj, ck), fj, disk);
  }

  FoamDescriptor descriptor() {
    FoamDescriptor f;
    for (int x = 0; x < static_cast<int>(facet_euler_.size()); ++x)
      if (merged_.find(x) == x) f.facets.push_back({facet_color_[x], facet_euler_[x]});
    f.seam_circles = seam_circles_;
    f.seam_arcs = d_.vertex_count();
    f.boundary_vertex_total = 2 * d_.vertex_count();
    for (ColorPair p : kPairs)
      for (const auto& [root, e] : comp_euler_[index(p)]) f.bicolored_component_eulers[index(p)].push_back(e);
    return f;
  }

 private:
  const ColoredDiagram& d_;
  std::vector<Color> facet_color_;
  std::vector<long> facet_euler_;
  UnionFind merged_;
  std::array<UnionFind, 3> pair_uf_;
  std::array<std::map<int, long>, 3> comp_euler_;
  int seam_circles_ = 0;

  void merge_components(ColorPair p, int a, int b, long delta) {
    auto& uf = pair_uf_[index(p)];
    auto& ce = comp_euler_[index(p)];
    int ra = uf.find(a), rb = uf.find(b);
    long sum = ra == rb ? ce.at(ra) : ce.at(ra) + ce.at(rb);
    if (ra != rb) {
      ce.erase(ra);
      ce.erase(rb);
    }
    ce[uf.unite(ra, rb)] = sum + delta;
  }

  void attach(ColorPair p, int facet, int disk) {
    auto& uf = pair_uf_[index(p)];
    auto& ce = comp_euler_[index(p)];
    int r = uf.find(facet);
    long e = ce.at(r);
    ce.erase(r);
    ce[uf.unite(r, disk)] = e;
  }
};

}  // namespace

FoamDescriptor identity_cobordism(const ColoredDiagram& d) { return Ledger(d).descriptor(); }

FoamDescriptor cone_on_trivial_theta() {
  FoamDescriptor f;
  // each facet is a triangle over an edge minus its two seam sides
  for (Color c : kColors) f.facets.push_back({c, 0});
  f.seam_arcs = 1;
  f.boundary_vertex_total = 2;
  for (auto& v : f.bicolored_component_eulers) v = {1};
  return f;
}

FoamDescriptor cone_on_tetrahedron() {
  FoamDescriptor f;
  for (Color c : kColors) {
    f.facets.push_back({c, 0});
    f.facets.push_back({c, 0});
  }
  f.seam_arcs = 4;
  f.seam_vertices = 1;
  f.boundary_vertex_total = 4;
  // each bicolored link of the tetrahedral graph is a single circle bounding a disk
  for (auto& v : f.bicolored_component_eulers) v = {1};
  return f;
}

FoamDescriptor bubble(const FoamDescriptor& in) {
  if (in.seam_arcs == 0 && in.seam_circles == 0) throw FoamError("bubble needs a seam");
  FoamDescriptor f = in;
  f.seam_vertices += 2;
  f.seam_arcs += 4;
  // a seam circle cut open becomes one of the new arcs
  if (in.seam_arcs == 0) --f.seam_circles;
  for (Color c : kColors) f.facets.push_back({c, 1});
  // bicolored surfaces change by a sphere summand, which leaves their Euler characteristics alone
  return f;
}

ScriptError::ScriptError(const std::string& msg, int line)
    : std::runtime_error("script line " + std::to_string(line) + ": " + msg), line_(line) {}

namespace {

Color script_color(const std::string& tok, int line) {
  if (tok.size() == 1)
    if (auto c = color_from_char(tok[0])) return *c;
  throw ScriptError("bad color '" + tok + "'", line);
}

int script_edge(const std::string& tok, int line) {
  std::string_view s = tok;
  if (!s.empty() && s[0] == 'e') s.remove_prefix(1);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
      s.size() > 9)
    throw ScriptError("bad edge reference '" + tok + "'", line);
  return std::stoi(std::string(s));
}

}  // namespace

ChangeScript parse_script(std::string_view text) {
  ChangeScript s;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "orient") {
      if (s.orient) throw ScriptError("second orient line", line);
      s.orient = raw.substr(raw.find("orient"));
      while (!s.orient->empty() && std::isspace(static_cast<unsigned char>(s.orient->back()))) s.orient->pop_back();
      continue;
    }
    ChangeStep st;
    st.line = line;
    if (tok[0] == "same") {
      if (tok.size() != 4) throw ScriptError("same takes a color and two edges", line);
      st.kind = StepKind::Same;
      st.c1 = st.c2 = script_color(tok[1], line);
      st.e1 = script_edge(tok[2], line);
      st.e2 = script_edge(tok[3], line);
    } else if (tok[0] == "mixed") {
      if (tok.size() != 5) throw ScriptError("mixed takes two colors and two edges", line);
      st.kind = StepKind::Mixed;
      st.c1 = script_color(tok[1], line);
      st.c2 = script_color(tok[2], line);
      if (st.c1 == st.c2) throw ScriptError("mixed step needs two distinct colors", line);
      st.e1 = script_edge(tok[3], line);
      st.e2 = script_edge(tok[4], line);
    } else {
      throw ScriptError("unknown step '" + tok[0] + "'", line);
    }
    s.steps.push_back(st);
  }
  return s;
}

ChangeScript parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScriptError("cannot open " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_script(ss.str());
}

std::string format_script(const ChangeScript& s) {
  std::ostringstream out;
  if (s.orient) out << *s.orient << '\n';
  for (const auto& st : s.steps) {
    if (st.kind == StepKind::Same)
      out << "same " << to_char(st.c1) << ' ' << st.e1 << ' ' << st.e2 << '\n';
    else
      out << "mixed " << to_char(st.c1) << ' ' << to_char(st.c2) << ' ' << st.e1 << ' ' << st.e2 << '\n';
  }
  return out.str();
}

void check_script(const ColoredDiagram& d, const ChangeScript& s) {
  const auto& edges = d.edges();
  int n = static_cast<int>(edges.size());
  for (const auto& st : s.steps) {
    for (int e : {st.e1, st.e2})
      if (e < 0 || e >= n)
        throw ScriptError("edge " + std::to_string(e) + " out of range (diagram has " + std::to_string(n) + " edges)",
                          st.line);
    if (edges[st.e1].color != st.c1 || edges[st.e2].color != st.c2)
      throw ScriptError("edge colors do not match the step", st.line);
  }
}

LedgerReport cobordism_ledger(const ColoredDiagram& d, const ChangeScript& s,
                              const std::optional<TotalOrientation>& t) {
  check_script(d, s);
  std::optional<TotalOrientation> orient = t;
  if (!orient && s.orient) orient = parse_orientation(d, *s.orient);
  std::vector<EdgeDoubleOrientation> dbl;
  if (orient) dbl = double_orientations(d, *orient);

  LedgerReport rep;
  rep.V = d.vertex_count();
  Ledger led(d);
  for (const auto& st : s.steps) {
    if (st.kind == StepKind::Same && orient && st.e1 != st.e2 && dbl[st.e1].sign != dbl[st.e2].sign) {
      Color j = st.c1 == Color::r ? Color::g : Color::r;
      int partner_edge = -1;
      for (int e = 0; e < static_cast<int>(d.edges().size()) && partner_edge < 0; ++e)
        if (d.edges()[e].color == j) partner_edge = e;
      rep.warnings.push_back("line " + std::to_string(st.line) + ": same step on edges " + std::to_string(st.e1) +
                             " and " + std::to_string(st.e2) +
                             " of opposite sign replaced by two mixed steps");
      for (int e : {st.e1, st.e2}) {
        ChangeStep m{StepKind::Mixed, st.c1, j, e, partner_edge, st.line};
        led.mixed(m.c1, m.c2, m.e1, m.e2);
        rep.applied.push_back(m);
        ++rep.mixed;
      }
      continue;
    }
    if (st.kind == StepKind::Same) {
      led.same(st.c1, st.e1, st.e2);
      ++rep.same;
    } else {
      led.mixed(st.c1, st.c2, st.e1, st.e2);
      ++rep.mixed;
    }
    rep.applied.push_back(st);
  }
  rep.foam = led.descriptor();
  rep.foam.validate();
  rep.cost = Rational(rep.same) + Rational(rep.mixed, 2);
  rep.chi_orb = chi_orb(rep.foam);
  rep.closed_form = Rational(-rep.V, 2) - rep.cost;
  return rep;
}

Rational slice_chi_upper_bound(const KleinInvariants& inv, bool knot_free) {
  Rational b(inv.mu - inv.V, 4);
  if (knot_free) b = std::min(b, Rational(inv.V, 8));
  return b;
}

Rational seamed_cobordism_upper_bound(const KleinInvariants& a, const KleinInvariants& b) {
  if (a.V != b.V)
    throw FoamError("seamed cobordism needs equal vertex counts (" + std::to_string(a.V) + " vs " +
                    std::to_string(b.V) + ")");
  return Rational(a.mu + b.mu - 2 * a.V, 4);
}

}  // namespace kleinsig
