#include "kleinsig/braid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace kleinsig {

std::string to_string(const BraidWord& w) {
  std::ostringstream out;
  out << w.strands << ":";
  for (int l : w.letters) out << ' ' << l;
  return out.str();
}

OrientedLinkDiagram braid_closure(const BraidWord& w) {
  const int n = w.strands;
  if (n < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<std::array<int, 4>> xs;
  std::vector<NodeSlot> tails, heads;
  std::vector<int> cur(n);
  std::vector<int> top(n);
  for (int p = 0; p < n; ++p) {
    top[p] = p;
    cur[p] = p;
    tails.push_back({});
    heads.push_back({});
  }
  std::vector<char> touched(n, 0);
  auto fresh = [&](NodeSlot tail) {
    tails.push_back(tail);
    heads.push_back({});
    return static_cast<int>(tails.size()) - 1;
  };
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    if (letter == 0 || i + 1 >= n) throw std::invalid_argument("braid letter out of range");
    int x = static_cast<int>(xs.size());
    int a_in = cur[i], b_in = cur[i + 1];
    touched[i] = touched[i + 1] = 1;
    int a_out, b_out;
    std::array<int, 4> slots{};
    if (letter > 0) {
      // A (left, NW->SE) under: [A_in, B_out, A_out, B_in]
      heads[a_in] = {x, 0};
      heads[b_in] = {x, 3};
      b_out = fresh({x, 1});
      a_out = fresh({x, 2});
      slots = {a_in, b_out, a_out, b_in};
    } else {
      // B (right, NE->SW) under: [B_in, A_in, B_out, A_out]
      heads[b_in] = {x, 0};
      heads[a_in] = {x, 1};
      b_out = fresh({x, 2});
      a_out = fresh({x, 3});
      slots = {b_in, a_in, b_out, a_out};
    }
    xs.push_back(slots);
    cur[i] = b_out;
    cur[i + 1] = a_out;
  }
  // close: the last arc at each position is identified with its top arc
  int free_loops = 0;
  std::vector<int> rename(tails.size());
  for (std::size_t a = 0; a < rename.size(); ++a) rename[a] = static_cast<int>(a);
  for (int p = 0; p < n; ++p) {
    if (!touched[p]) {
      ++free_loops;
      continue;
    }
    rename[cur[p]] = top[p];
    tails[top[p]] = tails[cur[p]];
  }
  // drop unused top arcs (free loops) and the merged bottom arcs
  std::vector<int> keep;
  std::vector<int> newid(tails.size(), -1);
  for (std::size_t a = 0; a < tails.size(); ++a) {
    bool is_free_top = static_cast<int>(a) < n && !touched[a];
    if (rename[a] != static_cast<int>(a) || is_free_top) continue;
    newid[a] = static_cast<int>(keep.size());
    keep.push_back(static_cast<int>(a));
  }
  std::vector<NodeSlot> t2, h2;
  for (int a : keep) {
    t2.push_back(tails[a]);
    h2.push_back(heads[a]);
  }
  for (auto& x : xs)
    for (int& a : x) a = newid[rename[a]];
  LinkDiagram l = link_from_oriented(xs, t2, h2, free_loops);
  std::vector<std::int8_t> dir(l.component_count(), 1);
  return {std::move(l), std::move(dir)};
}

namespace {

// Oriented planar diagram under Vogel moves.
struct PD {
  std::vector<std::array<int, 4>> x;
  std::vector<NodeSlot> tail, head;

  int arcs() const { return static_cast<int>(tail.size()); }
  // darts: 2a walks tail->head, 2a+1 walks head->tail
  static int arc(int d) { return d / 2; }
  static bool fwd(int d) { return d % 2 == 0; }
  NodeSlot start(int d) const { return fwd(d) ? tail[arc(d)] : head[arc(d)]; }
  NodeSlot end(int d) const { return fwd(d) ? head[arc(d)] : tail[arc(d)]; }
  int dart_leaving(NodeSlot e) const {
    int a = x[e.node][e.slot];
    return tail[a] == e ? 2 * a : 2 * a + 1;
  }
  // next dart around the face on the left
  int face_next(int d) const {
    NodeSlot e = end(d);
    return dart_leaving({e.node, (e.slot + 3) % 4});
  }
  // arc following a along its Seifert circle
  int seifert_next(int a) const {
    NodeSlot h = head[a];
    for (int s : {(h.slot + 1) % 4, (h.slot + 3) % 4}) {
      int b = x[h.node][s];
      if (tail[b] == NodeSlot{h.node, s}) return b;
    }
    throw BraidingError("crossing without an outgoing strand");
  }
  // arcs entering crossing c; they lie on the two distinct Seifert circles there
  std::array<int, 2> incoming(int c) const {
    std::array<int, 2> in{-1, -1};
    int k = 0;
    for (int s = 0; s < 4; ++s)
      if (head[x[c][s]] == NodeSlot{c, s}) in[k++ % 2] = x[c][s];
    return in;
  }
  int sign(int c) const {
    int u = -1, o = -1;
    for (int s = 0; s < 4; ++s)
      if (head[x[c][s]] == NodeSlot{c, s}) (s % 2 == 0 ? u : o) = s;
    if (u < 0 || o < 0) throw BraidingError("inconsistent orientation at crossing");
    return ((u - o + 4) % 4 == 1) ? 1 : -1;
  }
};

struct Faces {
  std::vector<int> face_of;               // per dart
  std::vector<std::vector<int>> darts;    // per face, in boundary order
};

Faces faces(const PD& pd) {
  Faces f;
  f.face_of.assign(2 * pd.arcs(), -1);
  for (int d = 0; d < 2 * pd.arcs(); ++d) {
    if (f.face_of[d] >= 0) continue;
    int id = static_cast<int>(f.darts.size());
    f.darts.emplace_back();
    int cur = d;
    do {
      f.face_of[cur] = id;
      f.darts[id].push_back(cur);
      cur = pd.face_next(cur);
    } while (cur != d);
  }
  return f;
}

std::vector<int> circles(const PD& pd, int& count) {
  std::vector<int> circ(pd.arcs(), -1);
  count = 0;
  for (int a = 0; a < pd.arcs(); ++a) {
    if (circ[a] >= 0) continue;
    int cur = a;
    do {
      circ[cur] = count;
      cur = pd.seifert_next(cur);
    } while (cur != a);
    ++count;
  }
  return circ;
}

void vogel_move(PD& pd, int d1, int d2) {
  NodeSlot P = pd.start(d1), Q = pd.end(d1), R = pd.start(d2), S = pd.end(d2);
  bool f1 = PD::fwd(d1), f2 = PD::fwd(d2);
  int X1 = static_cast<int>(pd.x.size()), X2 = X1 + 1;
  int e1a = PD::arc(d1), e2a = PD::arc(d2);
  int e1b = pd.arcs(), e1c = e1b + 1, e2b = e1b + 2, e2c = e1b + 3;
  pd.tail.resize(pd.tail.size() + 4);
  pd.head.resize(pd.head.size() + 4);
  pd.x.push_back({e2b, e1b, e2c, e1a});
  pd.x.push_back({e2a, e1b, e2b, e1c});
  pd.x[Q.node][Q.slot] = e1c;
  pd.x[S.node][S.slot] = e2c;
  auto seg = [&](int a, NodeSlot from, NodeSlot to, bool forward) {
    pd.tail[a] = forward ? from : to;
    pd.head[a] = forward ? to : from;
  };
  seg(e1a, P, {X1, 3}, f1);
  seg(e1b, {X1, 1}, {X2, 1}, f1);
  seg(e1c, {X2, 3}, Q, f1);
  seg(e2a, R, {X2, 0}, f2);
  seg(e2b, {X2, 2}, {X1, 0}, f2);
  seg(e2c, {X1, 2}, S, f2);
}

}  // namespace

int seifert_circle_count(const OrientedLinkDiagram& o) {
  PD pd;
  for (const auto& c : o.base.crossings) pd.x.push_back(c.slots);
  for (int a = 0; a < o.base.arc_count(); ++a) {
    pd.tail.push_back(o.tail(a));
    pd.head.push_back(o.head(a));
  }
  int n = 0;
  circles(pd, n);
  for (const auto& c : o.base.components) n += c.arcs.empty() ? 1 : 0;
  return n;
}

BraidWord to_braid(const OrientedLinkDiagram& o) {
  const auto& l = o.base;
  if (l.crossing_count() == 0) {
    if (l.component_count() != 1) throw BraidingError("to_braid needs a connected diagram");
    return {1, {}};
  }
  for (const auto& c : l.components)
    if (c.arcs.empty()) throw BraidingError("to_braid needs a connected diagram");
  PD pd;
  for (const auto& c : l.crossings) pd.x.push_back(c.slots);
  for (int a = 0; a < l.arc_count(); ++a) {
    pd.tail.push_back(o.tail(a));
    pd.head.push_back(o.head(a));
  }
  for (int c = 0; c < static_cast<int>(pd.x.size()); ++c) pd.sign(c);

  int ncirc = 0;
  circles(pd, ncirc);
  {
    Faces f = faces(pd);
    int C = static_cast<int>(pd.x.size());
    if (static_cast<int>(f.darts.size()) != C + 2)
      throw BraidingError("diagram code is not planar and connected (faces " +
                          std::to_string(f.darts.size()) + ", crossings " + std::to_string(C) + ")");
  }
  const long budget = 10L * (static_cast<long>(pd.x.size()) + ncirc) * (static_cast<long>(pd.x.size()) + ncirc);

  for (long moves = 0;; ++moves) {
    std::vector<int> circ = circles(pd, ncirc);
    Faces f = faces(pd);
    int d1 = -1, d2 = -1;
    for (const auto& fd : f.darts) {
      for (std::size_t i = 0; i < fd.size() && d1 < 0; ++i)
        for (std::size_t j = i + 1; j < fd.size(); ++j) {
          int a = fd[i], b = fd[j];
          if (circ[PD::arc(a)] != circ[PD::arc(b)] && PD::fwd(a) == PD::fwd(b)) {
            d1 = a;
            d2 = b;
            break;
          }
        }
      if (d1 >= 0) break;
    }
    if (d1 < 0) break;
    if (moves >= budget) throw BraidingError("Vogel move budget exhausted");
    vogel_move(pd, d1, d2);
  }

  // braided form: read the word
  std::vector<int> circ = circles(pd, ncirc);
  Faces f = faces(pd);
  const int C = static_cast<int>(pd.x.size());
  std::vector<std::set<int>> adj(ncirc);
  for (int c = 0; c < C; ++c) {
    auto in = pd.incoming(c);
    int a = circ[in[0]], b = circ[in[1]];
    if (a == b) throw BraidingError("crossing on a single Seifert circle");
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<int> path;
  if (ncirc == 1) throw BraidingError("crossings but one Seifert circle");
  {
    std::vector<int> ends;
    for (int c = 0; c < ncirc; ++c) {
      if (adj[c].size() > 2 || adj[c].empty()) throw BraidingError("Seifert graph is not a path");
      if (adj[c].size() == 1) ends.push_back(c);
    }
    if (ends.size() != 2) throw BraidingError("Seifert graph is not a path");
    // start from the end circle that bounds a single-circle face
    auto lonely_face = [&](int c) {
      for (int fi = 0; fi < static_cast<int>(f.darts.size()); ++fi) {
        bool only = true;
        for (int d : f.darts[fi]) only = only && circ[PD::arc(d)] == c;
        if (only) return fi;
      }
      return -1;
    };
    int start = lonely_face(ends[0]) >= 0 ? ends[0] : ends[1];
    int prev = -1, cur = start;
    while (cur >= 0) {
      path.push_back(cur);
      int nxt = -1;
      for (int b : adj[cur])
        if (b != prev) nxt = b;
      prev = cur;
      cur = static_cast<int>(path.size()) < ncirc ? nxt : -1;
    }
    if (static_cast<int>(path.size()) != ncirc) throw BraidingError("Seifert graph is not a path");
  }
  std::vector<int> pos(ncirc);
  for (int k = 0; k < ncirc; ++k) pos[path[k]] = k;

  // cut darts along a ray from the first end face through every circle
  int face = -1;
  for (int fi = 0; fi < static_cast<int>(f.darts.size()) && face < 0; ++fi) {
    bool only = true;
    for (int d : f.darts[fi]) only = only && circ[PD::arc(d)] == path[0];
    if (only) face = fi;
  }
  if (face < 0) throw BraidingError("no end face");
  std::vector<int> cut(ncirc);
  for (int k = 0; k < ncirc; ++k) {
    int dart = -1;
    for (int d : f.darts[face])
      if (circ[PD::arc(d)] == path[k]) {
        dart = d;
        break;
      }
    if (dart < 0) throw BraidingError("circles are not nested");
    cut[k] = PD::arc(dart);
    face = f.face_of[dart ^ 1];
  }

  // crossing order along each circle, starting after its cut arc
  std::vector<std::vector<int>> succ(C);
  std::vector<int> indeg(C, 0);
  for (int k = 0; k < ncirc; ++k) {
    std::vector<int> chain;
    int a = cut[k];
    do {
      chain.push_back(pd.head[a].node);
      a = pd.seifert_next(a);
    } while (a != cut[k]);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      succ[chain[i]].push_back(chain[i + 1]);
      ++indeg[chain[i + 1]];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int c = 0; c < C; ++c)
    if (indeg[c] == 0) ready.push(c);
  BraidWord w;
  w.strands = ncirc;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    auto in = pd.incoming(c);
    int k = std::min(pos[circ[in[0]]], pos[circ[in[1]]]);
    w.letters.push_back(pd.sign(c) * (k + 1));
    for (int s : succ[c])
      if (--indeg[s] == 0) ready.push(s);
  }
  if (static_cast<int>(w.letters.size()) != C) throw BraidingError("crossing order is cyclic");
  return w;
}

}  // namespace kleinsig
