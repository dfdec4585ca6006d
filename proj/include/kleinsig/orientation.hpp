#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/total_orientation.hpp"

namespace kleinsig {

class OrientationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TotalOrientation default_orientation(const ColoredDiagram& d);
TotalOrientation reverse(const TotalOrientation& t);
// throws OrientationError when the bit counts do not match the diagram
void check_orientation(const ColoredDiagram& d, const TotalOrientation& t);

// "orient default" or "orient rb:c0=+,c1=- bg:c0=+ rg:c0=-"; the leading
// keyword is optional. Unlisted components default to +.
TotalOrientation parse_orientation(const ColoredDiagram& d, std::string_view spec);
std::string format_orientation(const TotalOrientation& t);

// Orientation number k in canonical order: the bits rb..., bg..., rg... read
// as a binary number, most significant first, '-' = 1.
TotalOrientation orientation_at(const ColoredDiagram& d, std::uint64_t k);
std::uint64_t orientation_count(const ColoredDiagram& d);  // throws past 2^24

class OrientationEnumerator {
 public:
  explicit OrientationEnumerator(const ColoredDiagram& d);
  std::optional<TotalOrientation> next();
  std::uint64_t size() const { return total_; }

 private:
  const ColoredDiagram* d_;
  std::uint64_t k_ = 0;
  std::uint64_t total_ = 0;
};

std::vector<TotalOrientation> enumerate_orientations(const ColoredDiagram& d);

inline constexpr int kMaxEnumeratedMu = 24;

// For every slot and pair: +1 the oriented strand enters the node there, -1
// it leaves, 0 the slot is not in the pair.
struct FlowField {
  std::array<std::vector<std::array<std::int8_t, 4>>, 3> f;
  std::int8_t at(ColorPair p, NodeSlot e) const { return f[index(p)][e.node][e.slot]; }
  std::int8_t& at(ColorPair p, NodeSlot e) { return f[index(p)][e.node][e.slot]; }
};

FlowField flows(const ColoredDiagram& d, const TotalOrientation& t);
// Inverse of flows; throws OrientationError if the field is not a consistent
// orientation of every bicolored component.
TotalOrientation from_flows(const ColoredDiagram& d, const FlowField& f);

struct EdgeDoubleOrientation {
  int edge = -1;
  ColorPair ij = ColorPair::rb;  // the two pairs containing the edge color, in pair order
  ColorPair ik = ColorPair::rb;
  std::int8_t ij_dir = 1;  // +1 along the edge's run direction
  std::int8_t ik_dir = 1;
  int sign = 1;            // +1 parallel, -1 antiparallel
};

std::vector<EdgeDoubleOrientation> double_orientations(const ColoredDiagram& d, const TotalOrientation& t);

enum class CyclicType { RGB, BGR, None };
std::string_view cyclic_name(CyclicType c);

struct VertexType {
  int vertex = -1;
  int negatives = 0;
  CyclicType cyclic = CyclicType::None;
  // bits: 4 = r enters in rg, 2 = g enters in bg, 1 = b enters in rb
  int code = 0;
};

std::vector<VertexType> vertex_types(const ColoredDiagram& d, const TotalOrientation& t);
int signed_seam_vertex_count(const ColoredDiagram& d, const TotalOrientation& t);

// k-edge between two vertices is matched when its adjacent i-edges (i the
// least color other than k) have equal signs. Knot components are skipped.
std::map<int, bool> classify_edges_matched(const ColoredDiagram& d, const TotalOrientation& t);

}  // namespace kleinsig
