#include "kleinsig/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "kleinsig/transform.hpp"

namespace kleinsig {

namespace {

class Builder {
 public:
  int arc(Color c) {
    colors_[next_] = c;
    return next_++;
  }
  Color color(int a) const { return colors_.at(resolve(a)); }

  void vertex(int a, int b, int c) { nodes_.push_back({NodeKind::Vertex, {a, b, c}}); }
  void crossing(int a, int b, int c, int d) { nodes_.push_back({NodeKind::Crossing, {a, b, c, d}}); }

  // every later reference to drop means keep
  void identify(int keep, int drop) { alias_[drop] = keep; }

  // Strands run downward; letter +i crosses positions i-1 and i positively.
  std::vector<int> braid_box(std::vector<int> cur, const std::vector<int>& letters) {
    for (int l : letters) {
      int i = std::abs(l) - 1;
      int a_in = cur.at(i), b_in = cur.at(i + 1);
      int a_out = arc(color(a_in)), b_out = arc(color(b_in));
      if (l > 0) crossing(a_in, b_out, a_out, b_in);
      else crossing(b_in, a_in, b_out, a_out);
      cur[i] = b_out;
      cur[i + 1] = a_out;
    }
    return cur;
  }

  ColoredDiagram build(const std::string& name) const {
    RawDiagram raw;
    raw.name = name;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      DiagramNode n = nodes_[i];
      for (int& a : n.slots) a = resolve(a);
      raw.node_ids.push_back(static_cast<int>(i) + 1);
      raw.nodes.push_back(std::move(n));
    }
    for (const auto& [a, c] : colors_)
      if (!alias_.count(a)) raw.colors[a] = c;
    return ColoredDiagram::build(raw);
  }

 private:
  int next_ = 1;
  std::map<int, Color> colors_;
  std::map<int, int> alias_;
  std::vector<DiagramNode> nodes_;

  int resolve(int a) const {
    for (auto it = alias_.find(a); it != alias_.end(); it = alias_.find(a)) a = it->second;
    return a;
  }
};

std::vector<int> power(int i, int e) {
  return std::vector<int>(static_cast<std::size_t>(std::abs(e)), e >= 0 ? i : -i);
}

void append(std::vector<int>& w, const std::vector<int>& x) { w.insert(w.end(), x.begin(), x.end()); }

int edge_of_color(const ColoredDiagram& d, Color c) {
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e)
    if (d.edges()[e].color == c) return e;
  throw std::logic_error("no edge of that color");
}

}  // namespace

ColoredDiagram planar_graph(const std::vector<std::pair<double, double>>& points, const std::vector<PlanarEdge>& edges,
                            const std::string& name) {
  RawDiagram raw;
  raw.name = name;
  std::vector<std::vector<std::pair<double, int>>> around(points.size());
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto& [a, b, c] = edges[e];
    auto angle = [&](int from, int to) {
      return std::atan2(points[to].second - points[from].second, points[to].first - points[from].first);
    };
    around[a].push_back({angle(a, b), e + 1});
    around[b].push_back({angle(b, a), e + 1});
    raw.colors[e + 1] = c;
  }
  for (std::size_t v = 0; v < points.size(); ++v) {
    std::sort(around[v].begin(), around[v].end());
    DiagramNode n{NodeKind::Vertex, {}};
    for (const auto& [ang, a] : around[v]) n.slots.push_back(a);
    raw.node_ids.push_back(static_cast<int>(v) + 1);
    raw.nodes.push_back(std::move(n));
  }
  return ColoredDiagram::build(raw);
}

ColoredDiagram gen_trivial_theta() {
  Builder b;
  int r = b.arc(Color::r), g = b.arc(Color::g), bl = b.arc(Color::b);
  b.vertex(r, g, bl);
  b.vertex(r, bl, g);
  return b.build("trivial-theta");
}

ColoredDiagram gen_tetrahedron() {
  Builder b;
  int a1 = b.arc(Color::r), a2 = b.arc(Color::r), a3 = b.arc(Color::g), a4 = b.arc(Color::g), a5 = b.arc(Color::b),
      a6 = b.arc(Color::b);
  b.vertex(a1, a4, a5);
  b.vertex(a3, a6, a1);
  b.vertex(a5, a2, a3);
  b.vertex(a4, a6, a2);
  return b.build("tetrahedron");
}

ColoredDiagram gen_prism() {
  std::vector<std::pair<double, double>> pts;
  for (double radius : {1.0, 2.0})
    for (int i = 0; i < 3; ++i) {
      double t = (90.0 + 120.0 * i) * std::acos(-1.0) / 180.0;
      pts.push_back({radius * std::cos(t), radius * std::sin(t)});
    }
  // 0..2 inner triangle, 3..5 outer
  std::vector<PlanarEdge> e = {
      {0, 1, Color::r}, {1, 2, Color::g}, {2, 0, Color::b}, {0, 3, Color::g}, {1, 4, Color::b},
      {2, 5, Color::r}, {3, 4, Color::r}, {4, 5, Color::g}, {5, 3, Color::b},
  };
  return planar_graph(pts, e, "prism");
}

Generated gen_theta_n(int n) {
  if (n < 1) throw std::invalid_argument("theta-n needs n >= 1");
  int k = 2 * n + 1;
  Builder b;
  int t1 = b.arc(Color::g), t2 = b.arc(Color::b);
  auto bottom = b.braid_box({t1, t2}, power(1, k));
  // the red edge is a long (2,k) torus knot: it passes twice through a second box
  int r = b.arc(Color::r), u2 = b.arc(Color::r);
  auto red = b.braid_box({r, u2}, power(1, k));
  b.identify(u2, red[1]);
  b.vertex(r, t2, bottom[1]);
  b.vertex(t1, red[0], bottom[0]);
  Generated g{b.build("theta-n-" + std::to_string(n)), ChangeScript{}};
  int er = edge_of_color(g.d, Color::r), eg = edge_of_color(g.d, Color::g), eb = edge_of_color(g.d, Color::b);
  for (int i = 0; i < n; ++i) g.script->steps.push_back({StepKind::Same, Color::r, Color::r, er, er, i + 1});
  for (int i = 0; i < n; ++i) g.script->steps.push_back({StepKind::Mixed, Color::b, Color::g, eb, eg, n + i + 1});
  return g;
}

ColoredDiagram gen_kinoshita(int p, int q, int r) {
  Builder b;
  int t1 = b.arc(Color::r), t2 = b.arc(Color::g), t3 = b.arc(Color::b);
  std::vector<int> w = power(1, 2 * p);
  append(w, power(2, 2 * q));
  if (r != 0) {
    // full twists between the outer strands, carried past the middle one
    w.push_back(2);
    append(w, power(1, 2 * r));
    w.push_back(-2);
  }
  auto bottom = b.braid_box({t1, t2, t3}, w);
  b.vertex(t1, t2, t3);
  b.vertex(bottom[2], bottom[1], bottom[0]);
  return b.build("kinoshita-" + std::to_string(p) + "-" + std::to_string(q) + "-" + std::to_string(r));
}

ColoredDiagram gen_torus2k(int k) {
  if (k < 1) throw std::invalid_argument("torus2k needs k >= 1");
  Builder b;
  int t1 = b.arc(Color::r), t2 = b.arc(Color::b);
  auto bottom = b.braid_box({t1, t2}, power(1, 2 * k));
  b.identify(t1, bottom[0]);
  b.identify(t2, bottom[1]);
  int g1 = b.arc(Color::g), g2 = b.arc(Color::g);
  b.crossing(g1, g1, g2, g2);
  return b.build("torus2k-" + std::to_string(k));
}

ColoredDiagram gen_theta_kink() {
  Builder b;
  int r = b.arc(Color::r), g = b.arc(Color::g), bl = b.arc(Color::b);
  b.vertex(r, g, bl);
  b.vertex(r, bl, g);
  int x = b.arc(Color::r), y = b.arc(Color::r);
  b.crossing(x, x, y, y);
  return b.build("theta-kink");
}

std::vector<std::string> generator_families() {
  return {"trivial-theta", "tetrahedron", "prism", "theta-n", "kinoshita", "torus2k",
          "theta-kink",    "two-theta",   "theta-sum2", "tet-sum2"};
}

Generated generate(const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument(family + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
  };
  if (family == "trivial-theta") return need(0), Generated{gen_trivial_theta(), ChangeScript{}};
  if (family == "tetrahedron") return need(0), Generated{gen_tetrahedron(), std::nullopt};
  if (family == "prism") return need(0), Generated{gen_prism(), std::nullopt};
  if (family == "theta-n") return need(1), gen_theta_n(params[0]);
  if (family == "kinoshita") return need(3), Generated{gen_kinoshita(params[0], params[1], params[2]), std::nullopt};
  if (family == "torus2k") return need(1), Generated{gen_torus2k(params[0]), std::nullopt};
  if (family == "theta-kink") return need(0), Generated{gen_theta_kink(), std::nullopt};
  if (family == "two-theta") {
    need(0);
    auto t = gen_trivial_theta();
    auto u = disjoint_union(t, t).d;
    u.set_name("two-theta");
    return {u, std::nullopt};
  }
  if (family == "theta-sum2") {
    need(0);
    auto t = gen_trivial_theta();
    int e = edge_of_color(t, Color::r);
    auto u = edge_sum(t, e, t, e).d;
    u.set_name("theta-sum2");
    return {u, std::nullopt};
  }
  if (family == "tet-sum2") {
    need(0);
    auto t = gen_tetrahedron();
    auto u = edge_sum(t, 0, t, 0).d;
    u.set_name("tet-sum2");
    return {u, std::nullopt};
  }
  throw std::invalid_argument("unknown generator family '" + family + "'");
}

}  // namespace kleinsig
