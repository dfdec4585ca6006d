#include "kleinsig/orientation.hpp"

#include <charconv>
#include <sstream>

#include "kleinsig/linkops.hpp"

namespace kleinsig {

TotalOrientation default_orientation(const ColoredDiagram& d) {
  TotalOrientation t;
  for (ColorPair p : kPairs) t[p].assign(trace_bicolored(d, p).size(), 1);
  return t;
}

TotalOrientation reverse(const TotalOrientation& t) {
  TotalOrientation r = t;
  for (auto& v : r.dirs)
    for (auto& x : v) x = static_cast<std::int8_t>(-x);
  return r;
}

void check_orientation(const ColoredDiagram& d, const TotalOrientation& t) {
  for (ColorPair p : kPairs) {
    std::size_t want = trace_bicolored(d, p).size();
    if (t[p].size() != want)
      throw OrientationError(std::string("orientation has ") + std::to_string(t[p].size()) + " " +
                             std::string(pair_name(p)) + " directions, diagram has " + std::to_string(want) +
                             " components");
    for (auto x : t[p])
      if (x != 1 && x != -1) throw OrientationError("directions must be + or -");
  }
}

TotalOrientation parse_orientation(const ColoredDiagram& d, std::string_view spec) {
  TotalOrientation t = default_orientation(d);
  std::istringstream in{std::string(spec)};
  std::string tok;
  bool first = true;
  std::array<std::vector<char>, 3> set;
  for (ColorPair p : kPairs) set[index(p)].assign(t[p].size(), 0);
  while (in >> tok) {
    if (first && tok == "orient") {
      first = false;
      continue;
    }
    first = false;
    if (tok == "default") continue;
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw OrientationError("bad orientation token '" + tok + "'");
    auto pair = pair_from_name(std::string_view(tok).substr(0, colon));
    if (!pair) throw OrientationError("unknown color pair in '" + tok + "'");
    std::string_view rest = std::string_view(tok).substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      auto eq = item.find('=');
      if (item.size() < 4 || item[0] != 'c' || eq == std::string_view::npos || eq + 2 != item.size())
        throw OrientationError("bad component entry '" + std::string(item) + "'");
      int c = -1;
      auto [p, ec] = std::from_chars(item.data() + 1, item.data() + eq, c);
      if (ec != std::errc() || p != item.data() + eq || c < 0)
        throw OrientationError("bad component index in '" + std::string(item) + "'");
      if (c >= static_cast<int>(t[*pair].size()))
        throw OrientationError("component " + std::to_string(c) + " out of range for " +
                               std::string(pair_name(*pair)));
      if (set[index(*pair)][c]) throw OrientationError("component given twice: '" + std::string(item) + "'");
      set[index(*pair)][c] = 1;
      char s = item[eq + 1];
      if (s != '+' && s != '-') throw OrientationError("direction must be + or -");
      t[*pair][c] = s == '+' ? 1 : -1;
    }
  }
  return t;
}

std::string format_orientation(const TotalOrientation& t) {
  std::ostringstream out;
  out << "orient";
  for (ColorPair p : kPairs) {
    if (t[p].empty()) continue;
    out << ' ' << pair_name(p) << ':';
    for (std::size_t c = 0; c < t[p].size(); ++c)
      out << (c ? "," : "") << 'c' << c << '=' << (t[p][c] > 0 ? '+' : '-');
  }
  return out.str();
}

std::uint64_t orientation_count(const ColoredDiagram& d) {
  int mu = default_orientation(d).bit_count();
  if (mu > kMaxEnumeratedMu)
    throw OrientationError("mu = " + std::to_string(mu) + " exceeds the enumeration limit of " +
                           std::to_string(kMaxEnumeratedMu) + "; give an explicit orientation instead");
  return std::uint64_t{1} << mu;
}

TotalOrientation orientation_at(const ColoredDiagram& d, std::uint64_t k) {
  TotalOrientation t = default_orientation(d);
  int mu = t.bit_count();
  int bit = mu - 1;
  for (ColorPair p : kPairs)
    for (auto& x : t[p]) {
      x = ((k >> bit) & 1) ? -1 : 1;
      --bit;
    }
  return t;
}

OrientationEnumerator::OrientationEnumerator(const ColoredDiagram& d) : d_(&d), total_(orientation_count(d)) {}

std::optional<TotalOrientation> OrientationEnumerator::next() {
  if (k_ >= total_) return std::nullopt;
  return orientation_at(*d_, k_++);
}

std::vector<TotalOrientation> enumerate_orientations(const ColoredDiagram& d) {
  OrientationEnumerator e(d);
  std::vector<TotalOrientation> out;
  out.reserve(e.size());
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

FlowField flows(const ColoredDiagram& d, const TotalOrientation& t) {
  check_orientation(d, t);
  FlowField f;
  for (ColorPair p : kPairs) {
    auto& ff = f.f[index(p)];
    ff.assign(d.node_count(), {0, 0, 0, 0});
    auto comps = trace_bicolored(d, p);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (const auto& st : comps[c].steps) {
        bool along = st.forward == (t[p][c] > 0);
        const auto& en = d.ends(st.arc);
        NodeSlot from = along ? en[0] : en[1];
        NodeSlot to = along ? en[1] : en[0];
        ff[from.node][from.slot] = -1;
        ff[to.node][to.slot] = 1;
      }
  }
  return f;
}

TotalOrientation from_flows(const ColoredDiagram& d, const FlowField& f) {
  TotalOrientation t;
  for (ColorPair p : kPairs) {
    for (const auto& comp : trace_bicolored(d, p)) {
      int dir = 0;
      for (const auto& st : comp.steps) {
        const auto& en = d.ends(st.arc);
        int a = f.at(p, en[0]), b = f.at(p, en[1]);
        int along;
        if (a == -1 && b == 1) along = 1;
        else if (a == 1 && b == -1) along = -1;
        else throw OrientationError(std::string("flow is not an orientation on the ") +
                                    std::string(pair_name(p)) + " link");
        int this_dir = st.forward ? along : -along;
        if (dir == 0) dir = this_dir;
        else if (dir != this_dir)
          throw OrientationError(std::string("incompatible orientations on a ") + std::string(pair_name(p)) +
                                 " component");
      }
      t[p].push_back(static_cast<std::int8_t>(dir));
    }
  }
  return t;
}

std::vector<EdgeDoubleOrientation> double_orientations(const ColoredDiagram& d, const TotalOrientation& t) {
  FlowField f = flows(d, t);
  std::vector<EdgeDoubleOrientation> out;
  const auto& edges = d.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const Edge& ed = edges[e];
    EdgeDoubleOrientation o;
    o.edge = e;
    bool first = true;
    for (ColorPair p : kPairs) {
      if (!contains(p, ed.color)) continue;
      const ArcStep& st = ed.run.front();
      NodeSlot far = st.forward ? d.ends(st.arc)[1] : d.ends(st.arc)[0];
      std::int8_t dir = f.at(p, far) > 0 ? 1 : -1;
      if (first) {
        o.ij = p;
        o.ij_dir = dir;
        first = false;
      } else {
        o.ik = p;
        o.ik_dir = dir;
      }
    }
    o.sign = o.ij_dir == o.ik_dir ? 1 : -1;
    out.push_back(o);
  }
  return out;
}

std::string_view cyclic_name(CyclicType c) {
  switch (c) {
    case CyclicType::RGB: return "RGB";
    case CyclicType::BGR: return "BGR";
    case CyclicType::None: return "none";
  }
  return "none";
}

std::vector<VertexType> vertex_types(const ColoredDiagram& d, const TotalOrientation& t) {
  FlowField f = flows(d, t);
  std::vector<VertexType> out;
  for (int v = 0; v < d.node_count(); ++v) {
    const auto& n = d.node(v);
    if (n.kind != NodeKind::Vertex) continue;
    std::array<int, 3> slot_of{};
    for (int s = 0; s < 3; ++s) slot_of[index(d.color(n.slots[s]))] = s;
    bool d_rg = f.at(ColorPair::rg, {v, slot_of[index(Color::r)]}) > 0;
    bool d_gb = f.at(ColorPair::bg, {v, slot_of[index(Color::g)]}) > 0;
    bool d_br = f.at(ColorPair::rb, {v, slot_of[index(Color::b)]}) > 0;
    VertexType vt;
    vt.vertex = v;
    vt.code = (d_rg ? 4 : 0) | (d_gb ? 2 : 0) | (d_br ? 1 : 0);
    vt.negatives = (d_rg == d_br) + (d_rg == d_gb) + (d_gb == d_br);
    if (vt.code == 7) vt.cyclic = CyclicType::RGB;
    else if (vt.code == 0) vt.cyclic = CyclicType::BGR;
    out.push_back(vt);
  }
  return out;
}

int signed_seam_vertex_count(const ColoredDiagram& d, const TotalOrientation& t) {
  int sv = 0;
  for (const auto& vt : vertex_types(d, t)) {
    if (vt.cyclic == CyclicType::RGB) ++sv;
    else if (vt.cyclic == CyclicType::BGR) --sv;
  }
  return sv;
}

std::map<int, bool> classify_edges_matched(const ColoredDiagram& d, const TotalOrientation& t) {
  auto dbl = double_orientations(d, t);
  std::map<int, bool> out;
  const auto& edges = d.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const Edge& ed = edges[e];
    if (ed.closed() || ed.start->node == ed.end->node) continue;
    Color i = ed.color == Color::r ? Color::g : Color::r;
    auto adjacent_sign = [&](NodeSlot end) {
      const auto& n = d.node(end.node);
      for (int s = 0; s < 3; ++s)
        if (d.color(n.slots[s]) == i) return dbl[d.edge_of(n.slots[s])].sign;
      throw std::logic_error("vertex missing a color");
    };
    out[e] = adjacent_sign(*ed.start) == adjacent_sign(*ed.end);
  }
  return out;
}

}  // namespace kleinsig
