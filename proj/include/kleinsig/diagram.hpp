#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kleinsig/color.hpp"

namespace kleinsig {

enum class NodeKind : std::uint8_t { Crossing, Vertex };

// One end of an arc: a slot of a node.
struct NodeSlot {
  int node = -1;
  int slot = -1;
  auto operator<=>(const NodeSlot&) const = default;
};

// Slots are listed counterclockwise. For a crossing, slots {0,2} are the
// under-strand and {1,3} the over-strand; slot 0 is an under-strand end.
struct DiagramNode {
  NodeKind kind = NodeKind::Vertex;
  std::vector<int> slots;
  bool operator==(const DiagramNode&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class ValidationKind {
  Structure,        // empty diagram, bad slot count
  ArcMultiplicity,  // an arc id not used exactly twice
  UncoloredArc,
  ColorConstancy,   // strand through a crossing changes color
  VertexColors,     // vertex colors not pairwise distinct
  MissingColor,     // some color has no arc
};

std::string_view validation_kind_name(ValidationKind k);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationKind kind, const std::string& msg);
  ValidationKind kind() const { return kind_; }

 private:
  ValidationKind kind_;
};

// Diagram as written: node ids and arc ids are arbitrary positive integers.
struct RawDiagram {
  std::string name;
  std::vector<int> node_ids;
  std::vector<DiagramNode> nodes;
  std::map<int, Color> colors;
  std::optional<std::string> orient;
};

// Syntax only, no validation.
RawDiagram parse_raw(std::string_view text);

// For every raw node index, its canonical node index. Slots are never permuted.
using NodeMap = std::vector<int>;

// A traversal step along an arc. forward means from ends(arc)[0] to ends(arc)[1].
struct ArcStep {
  int arc = -1;
  bool forward = true;
  bool operator==(const ArcStep&) const = default;
};

struct Edge {
  Color color = Color::r;
  std::vector<ArcStep> run;
  std::optional<NodeSlot> start;  // vertex slots; empty for a knot component
  std::optional<NodeSlot> end;
  bool closed() const { return !start.has_value(); }
};

// Validated diagram in canonical numbering. Nodes and arcs are 0-based in
// memory and written 1-based.
class ColoredDiagram {
 public:
  ColoredDiagram() = default;

  // Validates and renumbers canonically. Throws ValidationError.
  static ColoredDiagram build(const RawDiagram& raw, NodeMap* map = nullptr);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::optional<std::string>& orient_hint() const { return orient_; }
  void set_orient_hint(std::optional<std::string> o) { orient_ = std::move(o); }

  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  const DiagramNode& node(int i) const { return nodes_.at(i); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int arc_count() const { return static_cast<int>(colors_.size()); }
  int vertex_count() const;
  int crossing_count() const;

  Color color(int arc) const { return colors_.at(arc); }
  const std::array<NodeSlot, 2>& ends(int arc) const { return ends_.at(arc); }
  int arc_at(NodeSlot e) const { return nodes_.at(e.node).slots.at(e.slot); }
  // the other end of the arc sitting at e
  NodeSlot other_end(NodeSlot e) const;
  // 0 or 1: which occurrence of its arc the end e is
  int occurrence(NodeSlot e) const;

  // edges ordered by least arc id; open runs start at their smaller vertex slot
  const std::vector<Edge>& edges() const { return edges_; }
  // edge index of each arc
  int edge_of(int arc) const { return edge_of_.at(arc); }

  // structural equality (nodes and colors, not the name)
  bool operator==(const ColoredDiagram& o) const {
    return nodes_ == o.nodes_ && colors_ == o.colors_;
  }

  RawDiagram to_raw() const;

 private:
  std::string name_;
  std::optional<std::string> orient_;
  std::vector<DiagramNode> nodes_;
  std::vector<Color> colors_;
  std::vector<std::array<NodeSlot, 2>> ends_;
  std::vector<Edge> edges_;
  std::vector<int> edge_of_;

  void index();
};

ColoredDiagram parse(std::string_view text);
ColoredDiagram parse_file(const std::string& path);
std::string serialize(const ColoredDiagram& d);

// Same as d.edges(); kept as a free function for symmetry with the other modules.
std::vector<Edge> derive_edges(const ColoredDiagram& d);

// Validate a raw diagram without renumbering. Throws ValidationError.
void validate(const RawDiagram& raw);

}  // namespace kleinsig
