#include "kleinsig/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

namespace kleinsig {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

std::string_view validation_kind_name(ValidationKind k) {
  switch (k) {
    case ValidationKind::Structure: return "structure";
    case ValidationKind::ArcMultiplicity: return "arc-multiplicity";
    case ValidationKind::UncoloredArc: return "uncolored-arc";
    case ValidationKind::ColorConstancy: return "color-constancy";
    case ValidationKind::VertexColors: return "vertex-colors";
    case ValidationKind::MissingColor: return "missing-color";
  }
  return "unknown";
}

ValidationError::ValidationError(ValidationKind kind, const std::string& msg)
    : std::runtime_error(std::string(validation_kind_name(kind)) + ": " + msg), kind_(kind) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_positive(std::string_view s, int line, int col, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'", line, col);
  if (v <= 0) throw ParseError(std::string(what) + " must be positive", line, col);
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

RawDiagram parse_raw(std::string_view text) {
  RawDiagram raw;
  std::set<int> seen_ids;
  bool have_name = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    auto toks = tokenize(line);
    if (toks.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    std::string_view key = toks[0].text;
    if (key == "name") {
      if (have_name) throw ParseError("duplicate name line", lineno, toks[0].column);
      if (toks.size() < 2) throw ParseError("name needs a label", lineno, toks[0].column);
      raw.name = std::string(trim(line.substr(toks[1].column - 1)));
      have_name = true;
    } else if (key == "vertex" || key == "crossing") {
      bool vertex = key == "vertex";
      if (toks.size() < 2) throw ParseError("missing node id", lineno, toks[0].column);
      // accept "<id>:" or "<id> :"
      std::string_view idtok = toks[1].text;
      std::size_t first_arc = 2;
      if (!idtok.empty() && idtok.back() == ':') {
        idtok.remove_suffix(1);
      } else if (toks.size() > 2 && toks[2].text == ":") {
        first_arc = 3;
      } else {
        throw ParseError("expected ':' after node id", lineno, toks[1].column + static_cast<int>(idtok.size()));
      }
      int id = parse_positive(idtok, lineno, toks[1].column, "node id");
      if (!seen_ids.insert(id).second)
        throw ParseError("duplicate node id " + std::to_string(id), lineno, toks[1].column);
      std::size_t want = vertex ? 3 : 4;
      std::size_t have = toks.size() - first_arc;
      if (have != want) {
        int col = have > want ? toks[first_arc + want].column
                              : toks.back().column + static_cast<int>(toks.back().text.size());
        throw ParseError(std::string(key) + " needs " + std::to_string(want) + " arcs, got " +
                             std::to_string(have),
                         lineno, col);
      }
      DiagramNode n;
      n.kind = vertex ? NodeKind::Vertex : NodeKind::Crossing;
      for (std::size_t i = first_arc; i < toks.size(); ++i)
        n.slots.push_back(parse_positive(toks[i].text, lineno, toks[i].column, "arc id"));
      raw.node_ids.push_back(id);
      raw.nodes.push_back(std::move(n));
    } else if (key == "color") {
      if (toks.size() < 2) throw ParseError("color needs at least one assignment", lineno, toks[0].column);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto t = toks[i].text;
        auto eq = t.find('=');
        if (eq == std::string_view::npos)
          throw ParseError("expected <arc>=<r|g|b>", lineno, toks[i].column);
        int arc = parse_positive(t.substr(0, eq), lineno, toks[i].column, "arc id");
        auto cs = t.substr(eq + 1);
        int ccol = toks[i].column + static_cast<int>(eq) + 1;
        if (cs.size() != 1 || !color_from_char(cs[0]))
          throw ParseError("unknown color '" + std::string(cs) + "'", lineno, ccol);
        Color c = *color_from_char(cs[0]);
        auto [it, fresh] = raw.colors.emplace(arc, c);
        if (!fresh && it->second != c)
          throw ParseError("conflicting colors for arc " + std::to_string(arc), lineno, toks[i].column);
      }
    } else if (key == "orient") {
      if (raw.orient) throw ParseError("duplicate orient line", lineno, toks[0].column);
      raw.orient = std::string(trim(line));
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", lineno, toks[0].column);
    }
    if (nl == text.size()) break;
  }
  return raw;
}

void validate(const RawDiagram& raw) {
  if (raw.nodes.empty()) throw ValidationError(ValidationKind::Structure, "diagram has no nodes");
  std::map<int, int> count;
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    const auto& n = raw.nodes[i];
    std::size_t want = n.kind == NodeKind::Vertex ? 3 : 4;
    if (n.slots.size() != want)
      throw ValidationError(ValidationKind::Structure, "node has wrong slot count");
    for (int a : n.slots) {
      if (a <= 0) throw ValidationError(ValidationKind::Structure, "arc ids must be positive");
      ++count[a];
    }
  }
  for (auto [a, c] : count)
    if (c != 2)
      throw ValidationError(ValidationKind::ArcMultiplicity,
                            "arc " + std::to_string(a) + " appears " + std::to_string(c) + " times");
  for (auto [a, c] : raw.colors) {
    (void)c;
    if (!count.count(a))
      throw ValidationError(ValidationKind::ArcMultiplicity,
                            "colored arc " + std::to_string(a) + " appears 0 times");
  }
  for (auto [a, c] : count) {
    (void)c;
    if (!raw.colors.count(a))
      throw ValidationError(ValidationKind::UncoloredArc, "arc " + std::to_string(a) + " has no color");
  }
  std::array<bool, 3> present{};
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    const auto& n = raw.nodes[i];
    auto col = [&](int s) { return raw.colors.at(n.slots[s]); };
    std::string where = "node " + std::to_string(i < raw.node_ids.size() ? raw.node_ids[i] : int(i) + 1);
    if (n.kind == NodeKind::Crossing) {
      if (col(0) != col(2))
        throw ValidationError(ValidationKind::ColorConstancy, where + ": under-strand changes color");
      if (col(1) != col(3))
        throw ValidationError(ValidationKind::ColorConstancy, where + ": over-strand changes color");
    } else {
      if (col(0) == col(1) || col(1) == col(2) || col(0) == col(2))
        throw ValidationError(ValidationKind::VertexColors, where + ": vertex colors not distinct");
    }
  }
  for (auto [a, c] : raw.colors) {
    (void)a;
    present[index(c)] = true;
  }
  for (Color c : kColors)
    if (!present[index(c)])
      throw ValidationError(ValidationKind::MissingColor,
                            std::string("no arc of color ") + to_char(c));
}

ColoredDiagram ColoredDiagram::build(const RawDiagram& raw, NodeMap* map) {
  validate(raw);
  const int n = static_cast<int>(raw.nodes.size());
  std::vector<int> ids = raw.node_ids;
  if (ids.size() != raw.nodes.size()) {
    ids.resize(n);
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
  }
  // arc id -> the raw (node, slot) ends
  std::map<int, std::vector<NodeSlot>> raw_ends;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < static_cast<int>(raw.nodes[i].slots.size()); ++s)
      raw_ends[raw.nodes[i].slots[s]].push_back({i, s});

  std::vector<int> by_id(n);
  for (int i = 0; i < n; ++i) by_id[i] = i;
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return ids[a] < ids[b]; });

  NodeMap node_map(n, -1);
  std::map<int, int> arc_map;
  int next_node = 0;
  std::deque<int> queue;
  for (int start : by_id) {
    if (node_map[start] >= 0) continue;
    node_map[start] = next_node++;
    queue.push_back(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int a : raw.nodes[u].slots) {
        if (!arc_map.count(a)) arc_map.emplace(a, static_cast<int>(arc_map.size()));
        for (NodeSlot e : raw_ends[a]) {
          if (node_map[e.node] < 0) {
            node_map[e.node] = next_node++;
            queue.push_back(e.node);
          }
        }
      }
    }
  }

  ColoredDiagram d;
  d.name_ = raw.name;
  d.orient_ = raw.orient;
  d.nodes_.resize(n);
  for (int i = 0; i < n; ++i) {
    DiagramNode out = raw.nodes[i];
    for (int& a : out.slots) a = arc_map.at(a);
    d.nodes_[node_map[i]] = std::move(out);
  }
  d.colors_.resize(arc_map.size());
  for (auto [a, c] : arc_map) d.colors_[c] = raw.colors.at(a);
  d.index();
  if (map) *map = std::move(node_map);
  return d;
}

int ColoredDiagram::vertex_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                        [](const DiagramNode& n) { return n.kind == NodeKind::Vertex; }));
}

int ColoredDiagram::crossing_count() const { return node_count() - vertex_count(); }

NodeSlot ColoredDiagram::other_end(NodeSlot e) const {
  const auto& en = ends_.at(arc_at(e));
  return en[0] == e ? en[1] : en[0];
}

int ColoredDiagram::occurrence(NodeSlot e) const { return ends_.at(arc_at(e))[0] == e ? 0 : 1; }

void ColoredDiagram::index() {
  ends_.assign(colors_.size(), {NodeSlot{}, NodeSlot{}});
  std::vector<int> fill(colors_.size(), 0);
  for (int i = 0; i < node_count(); ++i)
    for (int s = 0; s < static_cast<int>(nodes_[i].slots.size()); ++s) {
      int a = nodes_[i].slots[s];
      ends_[a][fill[a]++] = {i, s};
    }

  // Walk a strand starting by leaving through end e. Returns steps and the
  // final vertex end (or nullopt if it came back around).
  auto walk = [&](NodeSlot e, std::vector<ArcStep>& run) -> std::optional<NodeSlot> {
    NodeSlot cur = e;
    while (true) {
      int a = arc_at(cur);
      bool fwd = ends_[a][0] == cur;
      run.push_back({a, fwd});
      NodeSlot far = fwd ? ends_[a][1] : ends_[a][0];
      if (nodes_[far.node].kind == NodeKind::Vertex) return far;
      NodeSlot next{far.node, (far.slot + 2) % 4};
      if (next == e) return std::nullopt;
      cur = next;
    }
  };

  std::vector<Edge> edges;
  edge_of_.assign(colors_.size(), -1);
  for (int i = 0; i < node_count(); ++i) {
    if (nodes_[i].kind != NodeKind::Vertex) continue;
    for (int s = 0; s < 3; ++s) {
      NodeSlot e{i, s};
      if (edge_of_[arc_at(e)] >= 0) continue;
      Edge ed;
      ed.color = colors_[arc_at(e)];
      ed.start = e;
      ed.end = walk(e, ed.run);
      for (auto st : ed.run) edge_of_[st.arc] = 0;
      edges.push_back(std::move(ed));
    }
  }
  for (int a = 0; a < arc_count(); ++a) {
    if (edge_of_[a] >= 0) continue;
    // closed strand through crossings only; start at its least arc, forward
    Edge ed;
    ed.color = colors_[a];
    NodeSlot e = ends_[a][0];
    walk(e, ed.run);
    for (auto st : ed.run) edge_of_[st.arc] = 0;
    edges.push_back(std::move(ed));
  }
  auto least = [](const Edge& e) {
    int m = e.run.front().arc;
    for (auto st : e.run) m = std::min(m, st.arc);
    return m;
  };
  std::sort(edges.begin(), edges.end(), [&](const Edge& x, const Edge& y) { return least(x) < least(y); });
  for (int k = 0; k < static_cast<int>(edges.size()); ++k)
    for (auto st : edges[k].run) edge_of_[st.arc] = k;
  edges_ = std::move(edges);
}

RawDiagram ColoredDiagram::to_raw() const {
  RawDiagram raw;
  raw.name = name_;
  raw.orient = orient_;
  for (int i = 0; i < node_count(); ++i) {
    raw.node_ids.push_back(i + 1);
    DiagramNode n = nodes_[i];
    for (int& a : n.slots) a += 1;
    raw.nodes.push_back(std::move(n));
  }
  for (int a = 0; a < arc_count(); ++a) raw.colors[a + 1] = colors_[a];
  return raw;
}

ColoredDiagram parse(std::string_view text) { return ColoredDiagram::build(parse_raw(text)); }

ColoredDiagram parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string serialize(const ColoredDiagram& d) {
  std::ostringstream out;
  if (!d.name().empty()) out << "name " << d.name() << "\n";
  for (int i = 0; i < d.node_count(); ++i) {
    const auto& n = d.node(i);
    out << (n.kind == NodeKind::Vertex ? "vertex " : "crossing ") << i + 1 << ":";
    for (int a : n.slots) out << ' ' << a + 1;
    out << "\n";
  }
  out << "color";
  for (int a = 0; a < d.arc_count(); ++a) out << ' ' << a + 1 << '=' << to_char(d.color(a));
  out << "\n";
  if (d.orient_hint()) out << *d.orient_hint() << "\n";
  return out.str();
}

std::vector<Edge> derive_edges(const ColoredDiagram& d) { return d.edges(); }

}  // namespace kleinsig
