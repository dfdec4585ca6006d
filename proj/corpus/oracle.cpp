#include "oracle.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kleinsig::oracle {

std::vector<Rational> characteristic_polynomial(const IntMatrix& a) {
  const int n = a.size();
  using RM = std::vector<std::vector<Rational>>;
  RM A(n, std::vector<Rational>(n)), M(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = a(i, j);
  std::vector<Rational> c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    RM next(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int l = 0; l < n; ++l) s += A[i][l] * M[l][j];
        next[i][j] = s + (i == j ? c[n - k + 1] : Rational(0));
      }
    M = std::move(next);
    Rational tr = 0;
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

int sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (const auto& x : c) {
    int s = x > 0 ? 1 : x < 0 ? -1 : 0;
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Inertia descartes_inertia(const IntMatrix& m) {
  auto c = characteristic_polynomial(m);
  Inertia r;
  while (r.zero < static_cast<int>(c.size()) && c[r.zero] == 0) ++r.zero;
  r.positive = sign_changes(c);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  r.negative = sign_changes(c);
  return r;
}

int gordon_litherland_signature(const OrientedLinkDiagram& o) {
  const LinkDiagram& l = o.base;
  const int arcs = l.arc_count(), xs = l.crossing_count();
  if (xs == 0) throw std::invalid_argument("diagram has no crossings");
  // dart 2a runs tail->head of arc a, dart 2a+1 head->tail
  auto dart_end = [&](int d) { return d % 2 == 0 ? l.head[d / 2] : l.tail[d / 2]; };
  auto dart_leaving = [&](NodeSlot at) {
    int a = l.arc_at(at);
    return l.tail[a] == at ? 2 * a : 2 * a + 1;
  };
  std::vector<int> face(2 * arcs, -1);
  // corner (crossing, k) lies between slots k and k+1
  std::vector<std::array<int, 4>> corner(xs);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * arcs; ++d0) {
    if (face[d0] >= 0) continue;
    for (int d = d0; face[d] < 0;) {
      face[d] = faces;
      NodeSlot e = dart_end(d);
      int s = (e.slot + 3) % 4;
      corner[e.node][s] = faces;
      d = dart_leaving({e.node, s});
    }
    ++faces;
  }
  // checkerboard: the two sides of every arc differ
  std::vector<int> shade(faces, -1);
  shade[0] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < arcs; ++a) {
      int f = face[2 * a], g = face[2 * a + 1];
      if (shade[f] >= 0 && shade[g] < 0) shade[g] = 1 - shade[f], changed = true;
      if (shade[g] >= 0 && shade[f] < 0) shade[f] = 1 - shade[g], changed = true;
      if (shade[f] >= 0 && shade[f] == shade[g]) throw std::logic_error("no checkerboard coloring");
    }
  }
  std::map<int, int> white;
  for (int f = 0; f < faces; ++f)
    if (shade[f] == 0) white.emplace(f, static_cast<int>(white.size()));
  const int n = static_cast<int>(white.size());
  std::vector<std::vector<long>> G(n, std::vector<long>(n, 0));
  long mu = 0;
  for (int c = 0; c < xs; ++c) {
    const auto& k = corner[c];
    // eta = +1 when the shaded corners follow the under-strand counterclockwise
    int eta = shade[k[0]] == 1 ? 1 : -1;
    int w0 = eta == 1 ? k[1] : k[0], w1 = eta == 1 ? k[3] : k[2];
    if (w0 != w1) {
      int i = white.at(w0), j = white.at(w1);
      G[i][j] -= eta;
      G[j][i] -= eta;
      G[i][i] += eta;
      G[j][j] += eta;
    }
    int u = -1, ov = -1;
    for (int s = 0; s < 4; ++s)
      if (o.head(l.crossings[c].slots[s]) == NodeSlot{c, s}) (s % 2 == 0 ? u : ov) = s;
    // the oriented smoothing joins the corner between the incoming ends to its opposite
    int merged = (ov - u + 4) % 4 == 1 ? u : ov;
    if (shade[k[merged]] == 1) mu += eta;
  }
  IntMatrix g(n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) g(i - 1, j - 1) = G[i][j];
  Inertia in = descartes_inertia(g);
  // overall sign fixed by the positive trefoil having signature -2
  return -(in.positive - in.negative - static_cast<int>(mu));
}

namespace {

bool euler_planar(int nodes, const std::vector<std::array<NodeSlot, 2>>& ends,
                  const std::vector<int>& degree) {
  const int arcs = static_cast<int>(ends.size());
  std::map<NodeSlot, int> dart_from;  // dart leaving a slot
  for (int a = 0; a < arcs; ++a) {
    dart_from[ends[a][0]] = 2 * a;
    dart_from[ends[a][1]] = 2 * a + 1;
  }
  std::vector<char> seen(2 * arcs, 0);
  int faces = 0;
  for (int d0 = 0; d0 < 2 * arcs; ++d0) {
    if (seen[d0]) continue;
    ++faces;
    for (int d = d0; !seen[d];) {
      seen[d] = 1;
      NodeSlot e = d % 2 == 0 ? ends[d / 2][1] : ends[d / 2][0];
      d = dart_from.at({e.node, (e.slot + degree[e.node] - 1) % degree[e.node]});
    }
  }
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int pieces = nodes;
  for (const auto& e : ends) {
    int a = find(e[0].node), b = find(e[1].node);
    if (a != b) parent[a] = b, --pieces;
  }
  return nodes - arcs + faces == 2 * pieces;
}

}  // namespace

bool planar(const ColoredDiagram& d) {
  std::vector<std::array<NodeSlot, 2>> ends(d.arc_count());
  std::vector<int> deg(d.node_count());
  std::vector<int> seen(d.arc_count(), 0);
  for (int i = 0; i < d.node_count(); ++i) {
    deg[i] = static_cast<int>(d.node(i).slots.size());
    for (int s = 0; s < deg[i]; ++s) {
      int a = d.node(i).slots[s];
      ends[a][seen[a]++] = {i, s};
    }
  }
  return euler_planar(d.node_count(), ends, deg);
}

bool planar(const LinkDiagram& l) {
  std::vector<std::array<NodeSlot, 2>> ends(l.arc_count());
  for (int a = 0; a < l.arc_count(); ++a) ends[a] = {l.tail[a], l.head[a]};
  return euler_planar(l.crossing_count(), ends, std::vector<int>(l.crossing_count(), 4));
}

namespace {

struct P3 {
  double x, y, z;
};
P3 operator+(P3 a, P3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
P3 operator*(double s, P3 a) { return {s * a.x, s * a.y, s * a.z}; }

using Curve = std::vector<P3>;  // closed polygon, last point joins the first

// Signed crossings where a passes over b, viewed from a generic direction.
int linking(const Curve& a, const Curve& b) {
  // fixed generic rotation
  const double ax = 0.3137, ay = 0.1731;
  auto rot = [&](P3 p) {
    double y1 = p.y * std::cos(ax) - p.z * std::sin(ax), z1 = p.y * std::sin(ax) + p.z * std::cos(ax);
    double x2 = p.x * std::cos(ay) + z1 * std::sin(ay), z2 = -p.x * std::sin(ay) + z1 * std::cos(ay);
    return P3{x2, y1, z2};
  };
  Curve ra, rb;
  for (auto p : a) ra.push_back(rot(p));
  for (auto p : b) rb.push_back(rot(p));
  int total = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    P3 p = ra[i], q = ra[(i + 1) % ra.size()];
    for (std::size_t j = 0; j < rb.size(); ++j) {
      P3 r = rb[j], s = rb[(j + 1) % rb.size()];
      double dx1 = q.x - p.x, dy1 = q.y - p.y, dx2 = s.x - r.x, dy2 = s.y - r.y;
      double den = dx1 * dy2 - dy1 * dx2;
      if (std::abs(den) < 1e-14) continue;
      double t = ((r.x - p.x) * dy2 - (r.y - p.y) * dx2) / den;
      double u = ((r.x - p.x) * dy1 - (r.y - p.y) * dx1) / den;
      if (t < 0 || t >= 1 || u < 0 || u >= 1) continue;
      double za = p.z + t * (q.z - p.z), zb = r.z + u * (s.z - r.z);
      if (za <= zb) continue;
      // a over b: positive when b is a counterclockwise quarter-turn from a
      total += den > 0 ? 1 : -1;
    }
  }
  return total;
}

// Two unit disks at heights 0 and 1, normals +z; band i at angle phi_i leaves
// the lower disk radially, climbs at radius 1 + kOut while its normal turns
// half a revolution about the vertical, and re-enters the upper disk.
constexpr double kOut = 0.3;
constexpr double kPush = 0.04;
constexpr int kTwistSteps = 24;

struct Framed {
  Curve core;
  Curve normal;
};

double phi(int i, int k) { return 2 * std::acos(-1.0) * i / k; }
P3 radial(double f) { return {std::cos(f), std::sin(f), 0}; }
P3 tangential(double f) { return {-std::sin(f), std::cos(f), 0}; }
P3 at(double r, double f, double z) { return {r * std::cos(f), r * std::sin(f), z}; }

// core and normal going up band i, handedness h = +-1
Framed band_up(int i, int k, int h) {
  Framed b;
  double f = phi(i, k);
  double root = std::sqrt(0.5);
  P3 up{0, 0, 1};
  b.core.push_back(at(1.0, f, 0));
  b.normal.push_back(up);
  // fold toward the inside of the U
  b.core.push_back(at(1 + kOut, f, 0));
  b.normal.push_back(root * (up + (-1.0) * radial(f)));
  for (int s = 1; s < kTwistSteps; ++s) {
    double th = std::acos(-1.0) * s / kTwistSteps;
    b.core.push_back(at(1 + kOut, f, static_cast<double>(s) / kTwistSteps));
    b.normal.push_back((-std::cos(th)) * radial(f) + (h * std::sin(th)) * tangential(f));
  }
  b.core.push_back(at(1 + kOut, f, 1));
  b.normal.push_back(root * (up + radial(f)));
  b.core.push_back(at(1.0, f, 1));
  b.normal.push_back(up);
  return b;
}

void append(Framed& to, const Framed& x, bool reversed) {
  for (std::size_t i = 0; i < x.core.size(); ++i) {
    std::size_t j = reversed ? x.core.size() - 1 - i : i;
    to.core.push_back(x.core[j]);
    to.normal.push_back(x.normal[j]);
  }
}

// flat arc on a disk at height z, radius r, from angle f0 to f1 (counterclockwise)
void arc(Framed& to, double r, double f0, double f1, double z, int steps = 16) {
  for (int s = 1; s < steps; ++s) {
    to.core.push_back(at(r, f0 + (f1 - f0) * s / steps, z));
    to.normal.push_back({0, 0, 1});
  }
}

Curve pushoff(const Framed& f) {
  Curve c;
  for (std::size_t i = 0; i < f.core.size(); ++i) c.push_back(f.core[i] + kPush * f.normal[i]);
  return c;
}

// right-handed twist: the k = 2 boundary is the positive Hopf link
constexpr int handedness() { return 1; }

// generator between bands b and b-1, bands taken clockwise: up band b,
// across the upper disk, down band b-1, back below
Framed generator(int b, int k, int h) {
  Framed g;
  double f0 = phi(b, k), f1 = phi(b - 1, k);
  append(g, band_up(b, k, h), false);
  arc(g, 0.6, f0, f1, 1);
  append(g, band_up(b - 1, k, h), true);
  arc(g, 0.6, f1, f0, 0);
  return g;
}

}  // namespace

int geometric_hopf_boundary_linking() {
  // boundary of the k = 2 surface, band half-width w; the twist carries the
  // edge at angle phi + w below to phi - w above when h = +1
  const int k = 2, h = handedness();
  const double w = 0.15;
  auto edge_up = [&](int i, double side) {
    // side = +1: the edge starting at phi_i + w on the lower disk
    Curve c;
    double f = phi(i, k);
    c.push_back(at(1.0, f + side * w, 0));
    c.push_back(at(1 + kOut, f, 0) + (side * w) * tangential(f));
    for (int s = 1; s < kTwistSteps; ++s) {
      double th = std::acos(-1.0) * s / kTwistSteps;
      // width direction = normal x tangent(up)
      P3 n = (-std::cos(th)) * radial(f) + (h * std::sin(th)) * tangential(f);
      P3 b{n.y, -n.x, 0};
      c.push_back(at(1 + kOut, f, static_cast<double>(s) / kTwistSteps) + (side * w) * b);
    }
    P3 nb{-std::sin(f), std::cos(f), 0};
    c.push_back(at(1 + kOut, f, 1) + (-side * w) * nb);
    c.push_back(at(1.0, f - side * w, 1));
    return c;
  };
  auto rim = [&](Curve& c, double f0, double f1, double z) {
    for (int s = 0; s <= 16; ++s) c.push_back(at(1.0, f0 + (f1 - f0) * s / 16, z));
  };
  const double pi = std::acos(-1.0);
  // component A: lower rim from band 0 to band 1, up band 1, upper rim to band 0, down band 0
  Curve a;
  rim(a, phi(0, k) + w, phi(1, k) - w, 0);
  Curve up1 = edge_up(1, -1);
  a.insert(a.end(), up1.begin() + 1, up1.end() - 1);
  rim(a, phi(1, k) + w, 2 * pi - w, 1);
  Curve up0 = edge_up(0, 1);
  a.insert(a.end(), up0.rbegin() + 1, up0.rend() - 1);
  Curve b;
  rim(b, phi(1, k) + w, 2 * pi - w, 0);
  Curve up0b = edge_up(0, -1);
  b.insert(b.end(), up0b.begin() + 1, up0b.end() - 1);
  rim(b, phi(0, k) + w, phi(1, k) - w, 1);
  Curve up1b = edge_up(1, 1);
  b.insert(b.end(), up1b.rbegin() + 1, up1b.rend() - 1);
  return linking(a, b);
}

IntMatrix geometric_two_braid_seifert(int k) {
  if (k < 2) return IntMatrix(0);
  const int h = handedness();
  std::vector<Framed> g;
  for (int i = 0; i + 1 < k; ++i) g.push_back(generator(k - 1 - i, k, h));
  IntMatrix v(k - 1);
  for (int i = 0; i + 1 < k; ++i)
    for (int j = 0; j + 1 < k; ++j) v(i, j) = linking(g[i].core, pushoff(g[j]));
  return v;
}

IntMatrix torus_two_closed_form(int n) {
  IntMatrix v(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    v(i, i) = -1;
    if (i + 1 < 2 * n) v(i, i + 1) = 1;
  }
  return v;
}

}  // namespace kleinsig::oracle
