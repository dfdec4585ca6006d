#include "kleinsig/linkops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kleinsig {

namespace {

// the end of the same bicolored strand on the other side of node e.node
NodeSlot pass_through(const ColoredDiagram& d, NodeSlot e, ColorPair p) {
  const auto& n = d.node(e.node);
  if (n.kind == NodeKind::Crossing) return {e.node, (e.slot + 2) % 4};
  Color want = partner(p, d.color(n.slots[e.slot]));
  for (int s = 0; s < 3; ++s)
    if (d.color(n.slots[s]) == want) return {e.node, s};
  throw std::logic_error("vertex missing a color");
}

}  // namespace

std::vector<BicoloredComponent> trace_bicolored(const ColoredDiagram& d, ColorPair p) {
  std::vector<BicoloredComponent> out;
  std::vector<char> used(d.arc_count(), 0);
  for (int a = 0; a < d.arc_count(); ++a) {
    if (used[a] || !contains(p, d.color(a))) continue;
    BicoloredComponent comp;
    comp.least_arc = a;
    NodeSlot start = d.ends(a)[0];
    NodeSlot cur = start;
    while (true) {
      int arc = d.arc_at(cur);
      bool fwd = d.ends(arc)[0] == cur;
      comp.steps.push_back({arc, fwd});
      used[arc] = 1;
      NodeSlot far = fwd ? d.ends(arc)[1] : d.ends(arc)[0];
      NodeSlot next = pass_through(d, far, p);
      if (next == start) break;
      cur = next;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

void index_components(LinkDiagram& l) {
  l.arc_component.assign(l.arc_count(), -1);
  for (int c = 0; c < l.component_count(); ++c)
    for (int a : l.components[c].arcs) l.arc_component[a] = c;
}

}  // namespace

LinkDiagram bicolored_link(const ColoredDiagram& d, ColorPair p) {
  LinkDiagram l;
  std::vector<int> cross_index(d.node_count(), -1);
  for (int i = 0; i < d.node_count(); ++i) {
    const auto& n = d.node(i);
    if (n.kind != NodeKind::Crossing) continue;
    if (contains(p, d.color(n.slots[0])) && contains(p, d.color(n.slots[1]))) {
      cross_index[i] = l.crossing_count();
      l.crossings.push_back({{-1, -1, -1, -1}, i});
    }
  }
  for (const auto& comp : trace_bicolored(d, p)) {
    LinkComponent lc;
    lc.least_source_arc = comp.least_arc;
    const int k = static_cast<int>(comp.steps.size());
    auto far_of = [&](int s) {
      const auto& st = comp.steps[s];
      return st.forward ? d.ends(st.arc)[1] : d.ends(st.arc)[0];
    };
    std::vector<int> cuts;
    for (int s = 0; s < k; ++s)
      if (cross_index[far_of(s).node] >= 0) cuts.push_back(s);
    if (!cuts.empty()) {
      // the link arc holding step 0 ends at the first cut
      std::vector<int> order;
      order.push_back(cuts.back());
      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) order.push_back(cuts[c]);
      for (int cut : order) {
        // arc leaves the crossing reached at step `cut` and enters the next cut
        int next_cut = -1;
        for (int s = 1; s <= k; ++s) {
          int idx = (cut + s) % k;
          if (cross_index[far_of(idx).node] >= 0) {
            next_cut = idx;
            break;
          }
        }
        NodeSlot t = far_of(cut);
        t = {cross_index[t.node], (t.slot + 2) % 4};
        NodeSlot h = far_of(next_cut);
        h = {cross_index[h.node], h.slot};
        int id = l.arc_count();
        l.tail.push_back(t);
        l.head.push_back(h);
        l.crossings[t.node].slots[t.slot] = id;
        l.crossings[h.node].slots[h.slot] = id;
        lc.arcs.push_back(id);
      }
    }
    l.components.push_back(std::move(lc));
  }
  index_components(l);
  return l;
}

LinkDiagram bicolored_link(const ColoredDiagram& d, Color i, Color j) {
  return bicolored_link(d, pair_of(i, j));
}

LinkDiagram link_from_crossings(const std::vector<std::array<int, 4>>& crossings, int free_loops) {
  std::map<int, std::vector<NodeSlot>> ends;
  for (int x = 0; x < static_cast<int>(crossings.size()); ++x)
    for (int s = 0; s < 4; ++s) ends[crossings[x][s]].push_back({x, s});
  for (auto& [a, e] : ends)
    if (e.size() != 2) throw std::invalid_argument("arc " + std::to_string(a) + " must appear twice");
  LinkDiagram l;
  l.crossings.resize(crossings.size());
  for (std::size_t x = 0; x < crossings.size(); ++x) l.crossings[x].slots = {-1, -1, -1, -1};
  std::map<int, bool> seen;
  for (auto& [a, e] : ends) {
    if (seen[a]) continue;
    LinkComponent comp;
    NodeSlot start = e[0];
    NodeSlot cur = start;
    while (true) {
      int arc = crossings[cur.node][cur.slot];
      seen[arc] = true;
      const auto& en = ends[arc];
      NodeSlot far = en[0] == cur ? en[1] : en[0];
      int id = l.arc_count();
      l.tail.push_back(cur);
      l.head.push_back(far);
      l.crossings[cur.node].slots[cur.slot] = id;
      l.crossings[far.node].slots[far.slot] = id;
      comp.arcs.push_back(id);
      NodeSlot next{far.node, (far.slot + 2) % 4};
      if (next == start) break;
      cur = next;
    }
    comp.least_source_arc = a;
    l.components.push_back(std::move(comp));
  }
  for (int i = 0; i < free_loops; ++i) l.components.push_back({});
  index_components(l);
  return l;
}

LinkDiagram link_from_oriented(const std::vector<std::array<int, 4>>& crossings,
                               const std::vector<NodeSlot>& tails, const std::vector<NodeSlot>& heads,
                               int free_loops) {
  const int n = static_cast<int>(tails.size());
  if (static_cast<int>(heads.size()) != n) throw std::invalid_argument("tails and heads differ in size");
  LinkDiagram l;
  l.tail = tails;
  l.head = heads;
  for (const auto& x : crossings) l.crossings.push_back({x, -1});
  // the arc leaving (x, s+2) follows the arc entering (x, s)
  std::vector<int> next(n, -1);
  for (int a = 0; a < n; ++a) {
    NodeSlot h = heads[a];
    int b = crossings.at(h.node)[(h.slot + 2) % 4];
    if (tails.at(b) != NodeSlot{h.node, (h.slot + 2) % 4})
      throw std::invalid_argument("orientation is not consistent through a crossing");
    next[a] = b;
  }
  std::vector<char> seen(n, 0);
  for (int a = 0; a < n; ++a) {
    if (seen[a]) continue;
    LinkComponent c;
    c.least_source_arc = a;
    int cur = a;
    do {
      seen[cur] = 1;
      c.arcs.push_back(cur);
      cur = next[cur];
    } while (cur != a);
    l.components.push_back(std::move(c));
  }
  for (int i = 0; i < free_loops; ++i) l.components.push_back({});
  index_components(l);
  return l;
}

NodeSlot OrientedLinkDiagram::tail(int arc) const {
  return direction.at(base.arc_component.at(arc)) > 0 ? base.tail.at(arc) : base.head.at(arc);
}

NodeSlot OrientedLinkDiagram::head(int arc) const {
  return direction.at(base.arc_component.at(arc)) > 0 ? base.head.at(arc) : base.tail.at(arc);
}

OrientedLinkDiagram orient(LinkDiagram l, std::vector<std::int8_t> direction) {
  if (static_cast<int>(direction.size()) != l.component_count())
    throw std::invalid_argument("orientation needs one direction per component");
  return {std::move(l), std::move(direction)};
}

OrientedLinkDiagram oriented_bicolored(const ColoredDiagram& d, const TotalOrientation& t, ColorPair p) {
  return orient(bicolored_link(d, p), t[p]);
}

ComponentCount component_count(const ColoredDiagram& d) {
  ComponentCount c;
  for (ColorPair p : kPairs) {
    c.per_pair[index(p)] = static_cast<int>(trace_bicolored(d, p).size());
    c.mu += c.per_pair[index(p)];
  }
  c.hamiltonian = c.per_pair[0] == 1 && c.per_pair[1] == 1 && c.per_pair[2] == 1;
  return c;
}

int crossing_sign(int x, const OrientedLinkDiagram& o) {
  const auto& cr = o.base.crossings.at(x);
  int u = -1, v = -1;
  for (int s = 0; s < 4; ++s) {
    NodeSlot e{x, s};
    if (o.head(cr.slots[s]) == e) (s % 2 == 0 ? u : v) = s;
  }
  if (u < 0 || v < 0) throw std::logic_error("inconsistent orientation at crossing");
  return ((u - v + 4) % 4 == 1) ? 1 : -1;
}

int writhe(const OrientedLinkDiagram& o) {
  int w = 0;
  for (int x = 0; x < o.base.crossing_count(); ++x) w += crossing_sign(x, o);
  return w;
}

int linking_number(const OrientedLinkDiagram& o, int c1, int c2) {
  if (c1 == c2) throw std::invalid_argument("linking number needs two distinct components");
  int sum = 0;
  for (int x = 0; x < o.base.crossing_count(); ++x) {
    int a = o.base.arc_component[o.base.crossings[x].slots[0]];
    int b = o.base.arc_component[o.base.crossings[x].slots[1]];
    if ((a == c1 && b == c2) || (a == c2 && b == c1)) sum += crossing_sign(x, o);
  }
  return sum / 2;
}

int link_total_linking(const OrientedLinkDiagram& o) {
  int sum = 0;
  for (int x = 0; x < o.base.crossing_count(); ++x) {
    int a = o.base.arc_component[o.base.crossings[x].slots[0]];
    int b = o.base.arc_component[o.base.crossings[x].slots[1]];
    if (a != b) sum += crossing_sign(x, o);
  }
  return sum / 2;
}

int total_linking(const ColoredDiagram& d, const TotalOrientation& t) {
  int sum = 0;
  for (ColorPair p : kPairs) sum += link_total_linking(oriented_bicolored(d, t, p));
  return sum;
}

namespace {

std::vector<std::vector<int>> piece_components(const LinkDiagram& l) {
  std::vector<int> parent(l.component_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& cr : l.crossings) {
    int a = find(l.arc_component[cr.slots[0]]);
    int b = find(l.arc_component[cr.slots[1]]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int c = 0; c < l.component_count(); ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<int>> out;
  for (auto& [root, comps] : groups) out.push_back(comps);
  return out;
}

LinkDiagram extract(const LinkDiagram& l, const std::vector<int>& comps) {
  std::vector<char> keep_comp(l.component_count(), 0);
  for (int c : comps) keep_comp[c] = 1;
  LinkDiagram out;
  std::vector<int> xmap(l.crossing_count(), -1), amap(l.arc_count(), -1);
  for (int x = 0; x < l.crossing_count(); ++x)
    if (keep_comp[l.arc_component[l.crossings[x].slots[0]]]) {
      xmap[x] = out.crossing_count();
      out.crossings.push_back(l.crossings[x]);
    }
  for (int c : comps) {
    LinkComponent lc;
    lc.least_source_arc = l.components[c].least_source_arc;
    for (int a : l.components[c].arcs) {
      amap[a] = out.arc_count();
      out.tail.push_back({xmap[l.tail[a].node], l.tail[a].slot});
      out.head.push_back({xmap[l.head[a].node], l.head[a].slot});
      lc.arcs.push_back(amap[a]);
    }
    out.components.push_back(std::move(lc));
  }
  for (auto& cr : out.crossings)
    for (int& a : cr.slots) a = amap[a];
  index_components(out);
  return out;
}

}  // namespace

std::vector<LinkDiagram> split_decompose(const LinkDiagram& l) {
  std::vector<LinkDiagram> out;
  for (const auto& comps : piece_components(l)) out.push_back(extract(l, comps));
  return out;
}

std::vector<OrientedLinkDiagram> split_decompose(const OrientedLinkDiagram& o) {
  std::vector<OrientedLinkDiagram> out;
  for (const auto& comps : piece_components(o.base)) {
    std::vector<std::int8_t> dir;
    for (int c : comps) dir.push_back(o.direction[c]);
    out.push_back({extract(o.base, comps), std::move(dir)});
  }
  return out;
}

std::string to_ksg(const LinkDiagram& l) {
  std::ostringstream out;
  for (int x = 0; x < l.crossing_count(); ++x) {
    out << "crossing " << x + 1 << ":";
    for (int a : l.crossings[x].slots) out << ' ' << a + 1;
    out << "\n";
  }
  int loops = 0;
  for (const auto& c : l.components) loops += c.arcs.empty() ? 1 : 0;
  if (loops) out << "# free loops: " << loops << "\n";
  return out.str();
}

}  // namespace kleinsig
