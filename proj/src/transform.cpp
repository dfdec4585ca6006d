#include "kleinsig/transform.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace kleinsig {

namespace {

struct Origin {
  int source = -1;
  NodeSlot at;
};

struct Assembly {
  RawDiagram raw;
  std::vector<std::vector<Origin>> origin;
  int next_arc = 1;

  // Appends the nodes of d, old_slot(node, j) giving the old slot that new
  // slot j takes its arc from. Returns raw index per node (-1 if skipped).
  // Arc a of d becomes raw arc a + base.
  std::vector<int> append(const ColoredDiagram& d, int source, const std::function<int(const DiagramNode&, int)>& old_slot,
                          const std::vector<char>& skip = {}) {
    int base = next_arc;
    std::vector<int> where(d.node_count(), -1);
    for (int i = 0; i < d.node_count(); ++i) {
      if (!skip.empty() && skip[i]) continue;
      const auto& n = d.node(i);
      DiagramNode m{n.kind, std::vector<int>(n.slots.size())};
      std::vector<Origin> org(n.slots.size());
      for (int j = 0; j < static_cast<int>(n.slots.size()); ++j) {
        int s = old_slot(n, j);
        m.slots[j] = n.slots[s] + base;
        org[j] = {source, {i, s}};
      }
      where[i] = static_cast<int>(raw.nodes.size());
      raw.node_ids.push_back(static_cast<int>(raw.nodes.size()) + 1);
      raw.nodes.push_back(std::move(m));
      origin.push_back(std::move(org));
    }
    for (int a = 0; a < d.arc_count(); ++a) raw.colors[a + base] = d.color(a);
    next_arc = base + d.arc_count();
    return where;
  }

  int fresh_arc(Color c) {
    raw.colors[next_arc] = c;
    return next_arc++;
  }

  // raw (node, slot) of an old end, given the append map and the slot permutation inverse
  NodeSlot locate(const std::vector<int>& where, NodeSlot old) const {
    int r = where.at(old.node);
    const auto& org = origin.at(r);
    for (int j = 0; j < static_cast<int>(org.size()); ++j)
      if (org[j].at.slot == old.slot) return {r, j};
    throw std::logic_error("slot not found");
  }

  Transformed finish(const std::vector<const FlowField*>& sources, NodeMap* map_out = nullptr) {
    // drop colors of arcs that no longer appear
    std::map<int, int> uses;
    for (const auto& n : raw.nodes)
      for (int a : n.slots) ++uses[a];
    for (auto it = raw.colors.begin(); it != raw.colors.end();)
      it = uses.count(it->first) ? std::next(it) : raw.colors.erase(it);
    NodeMap map;
    Transformed out{ColoredDiagram::build(raw, &map), std::nullopt};
    if (map_out) *map_out = map;
    if (sources.empty()) return out;
    FlowField f;
    for (auto& v : f.f) v.assign(out.d.node_count(), {0, 0, 0, 0});
    for (int i = 0; i < static_cast<int>(raw.nodes.size()); ++i)
      for (int j = 0; j < static_cast<int>(raw.nodes[i].slots.size()); ++j) {
        const Origin& o = origin[i][j];
        for (ColorPair p : kPairs) f.at(p, {map[i], j}) = sources.at(o.source)->at(p, o.at);
      }
    out.t = from_flows(out.d, f);
    return out;
  }
};

int keep(const DiagramNode&, int j) { return j; }
int mirror_slot(const DiagramNode& n, int j) {
  return n.kind == NodeKind::Crossing ? (j + 1) % 4 : j;
}
int flip_slot(const DiagramNode& n, int j) {
  return n.kind == NodeKind::Crossing ? 3 - j : (3 - j) % 3;
}

void check_pair(const std::optional<TotalOrientation>& t1, const std::optional<TotalOrientation>& t2) {
  if (t1.has_value() != t2.has_value()) throw TransformError("give orientations for both summands or neither");
}

Transformed single(const ColoredDiagram& d, const std::optional<TotalOrientation>& t,
                   int (*slot)(const DiagramNode&, int), NodeMap* map = nullptr) {
  Assembly a;
  a.raw.name = d.name();
  a.append(d, 0, slot);
  std::optional<FlowField> f;
  if (t) f = flows(d, *t);
  return a.finish(f ? std::vector<const FlowField*>{&*f} : std::vector<const FlowField*>{}, map);
}

}  // namespace

std::vector<int> vertex_nodes(const ColoredDiagram& d) {
  std::vector<int> v;
  for (int i = 0; i < d.node_count(); ++i)
    if (d.node(i).kind == NodeKind::Vertex) v.push_back(i);
  return v;
}

Transformed mirror(const ColoredDiagram& d, const std::optional<TotalOrientation>& t) {
  auto out = single(d, t, mirror_slot);
  out.d.set_name(d.name().empty() ? "" : "mirror-" + d.name());
  return out;
}

Transformed flip(const ColoredDiagram& d, const std::optional<TotalOrientation>& t) {
  auto out = single(d, t, flip_slot);
  out.d.set_name(d.name());
  return out;
}

ColoredDiagram half_turn_crossings(const ColoredDiagram& d) {
  auto out = single(d, std::nullopt, [](const DiagramNode& n, int j) {
    return n.kind == NodeKind::Crossing ? (j + 2) % 4 : j;
  });
  out.d.set_name(d.name());
  return out.d;
}

Transformed disjoint_union(const ColoredDiagram& d1, const ColoredDiagram& d2,
                           const std::optional<TotalOrientation>& t1, const std::optional<TotalOrientation>& t2) {
  check_pair(t1, t2);
  Assembly a;
  a.raw.name = d1.name() + "+" + d2.name();
  a.append(d1, 0, keep);
  a.append(d2, 1, keep);
  if (!t1) return a.finish({});
  FlowField f1 = flows(d1, *t1), f2 = flows(d2, *t2);
  return a.finish({&f1, &f2});
}

Transformed edge_sum(const ColoredDiagram& d1, int e1, const ColoredDiagram& d2, int e2,
                     const std::optional<TotalOrientation>& t1, const std::optional<TotalOrientation>& t2,
                     Matching m) {
  check_pair(t1, t2);
  if (e1 < 0 || e1 >= static_cast<int>(d1.edges().size()) || e2 < 0 || e2 >= static_cast<int>(d2.edges().size()))
    throw TransformError("edge index out of range");
  const Edge& x = d1.edges()[e1];
  const Edge& y = d2.edges()[e2];
  if (x.color != y.color)
    throw TransformError(std::string("edge colors differ: ") + to_char(x.color) + " vs " + to_char(y.color));
  std::optional<FlowField> f1, f2;
  if (t1) {
    f1 = flows(d1, *t1);
    f2 = flows(d2, *t2);
  }
  int a1 = x.run.front().arc, a2 = y.run.front().arc;
  NodeSlot p0 = d1.ends(a1)[0], p1 = d1.ends(a1)[1];
  NodeSlot q0 = d2.ends(a2)[0], q1 = d2.ends(a2)[1];

  bool straight = m != Matching::Crossed;
  if (f1) {
    // each new arc must join an entering end to a leaving end in both pairs
    std::vector<bool> want;
    for (ColorPair p : kPairs) {
      if (!contains(p, x.color)) continue;
      want.push_back(f1->at(p, p0) != f2->at(p, q1));
    }
    if (want[0] != want[1]) throw OrientationError("edges have different signs, no matching joins both orientations");
    if (m == Matching::Auto) straight = want[0];
    else if (straight != want[0]) throw OrientationError("requested matching contradicts the orientations");
  }

  Assembly a;
  a.raw.name = d1.name() + "#2" + d2.name();
  auto w1 = a.append(d1, 0, keep);
  auto w2 = a.append(d2, 1, keep);
  NodeSlot r0 = a.locate(w1, p0), r1 = a.locate(w1, p1);
  NodeSlot s0 = a.locate(w2, q0), s1 = a.locate(w2, q1);
  int u = a.fresh_arc(x.color), v = a.fresh_arc(x.color);
  auto set = [&](NodeSlot at, int arc) { a.raw.nodes[at.node].slots[at.slot] = arc; };
  set(r0, u);
  set(straight ? s1 : s0, u);
  set(r1, v);
  set(straight ? s0 : s1, v);
  if (!f1) return a.finish({});
  return a.finish({&*f1, &*f2});
}

Transformed vertex_sum(const ColoredDiagram& d1, int v1, const ColoredDiagram& d2_in, int v2,
                       const std::optional<TotalOrientation>& t1, const std::optional<TotalOrientation>& t2_in) {
  check_pair(t1, t2_in);
  auto is_vertex = [](const ColoredDiagram& d, int v) {
    return v >= 0 && v < d.node_count() && d.node(v).kind == NodeKind::Vertex;
  };
  if (!is_vertex(d1, v1) || !is_vertex(d2_in, v2)) throw TransformError("vertex index does not name a vertex");

  auto order = [](const ColoredDiagram& d, int v) {
    const auto& s = d.node(v).slots;
    // cyclic color order normalized to start at red
    std::array<Color, 3> c{d.color(s[0]), d.color(s[1]), d.color(s[2])};
    while (c[0] != Color::r) std::rotate(c.begin(), c.begin() + 1, c.end());
    return c;
  };
  ColoredDiagram d2 = d2_in;
  std::optional<TotalOrientation> t2 = t2_in;
  int w = v2;
  if (order(d1, v1) == order(d2_in, v2)) {
    // the summands must meet with opposite cyclic orders to join without crossings
    NodeMap map;
    Transformed fl = single(d2_in, t2_in, flip_slot, &map);
    d2 = fl.d;
    t2 = fl.t;
    w = map[v2];
  }

  std::optional<FlowField> f1, f2;
  if (t1) {
    f1 = flows(d1, *t1);
    f2 = flows(d2, *t2);
    auto code = [](const ColoredDiagram& d, const TotalOrientation& t, int v) {
      for (const auto& vt : vertex_types(d, t))
        if (vt.vertex == v) return vt.code;
      return -1;
    };
    int c1 = code(d1, *t1, v1), c2 = code(d2, *t2, w);
    if (c2 != (~c1 & 7))
      throw OrientationError("vertex orientations are not opposite (codes " + std::to_string(c1) + " and " +
                             std::to_string(c2) + ")");
  }

  Assembly a;
  a.raw.name = d1.name() + "#3" + d2.name();
  std::vector<char> skip1(d1.node_count(), 0), skip2(d2.node_count(), 0);
  skip1[v1] = 1;
  skip2[w] = 1;
  auto w1 = a.append(d1, 0, keep, skip1);
  auto w2 = a.append(d2, 1, keep, skip2);
  for (Color c : kColors) {
    auto far_end = [&](const ColoredDiagram& d, int v) {
      for (int s = 0; s < 3; ++s)
        if (d.color(d.node(v).slots[s]) == c) return d.other_end({v, s});
      throw std::logic_error("vertex missing a color");
    };
    NodeSlot o1 = a.locate(w1, far_end(d1, v1));
    NodeSlot o2 = a.locate(w2, far_end(d2, w));
    int arc = a.fresh_arc(c);
    a.raw.nodes[o1.node].slots[o1.slot] = arc;
    a.raw.nodes[o2.node].slots[o2.slot] = arc;
  }
  if (!f1) return a.finish({});
  return a.finish({&*f1, &*f2});
}

}  // namespace kleinsig
