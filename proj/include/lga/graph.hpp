#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lga/config.hpp"

namespace lga {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Vertex {
  std::string name;
  int level = 0;
};

// Directed edge dropping exactly one level (tail level = head level + 1 on
// valid graphs).  Edges carry their own identity, so parallel edges between
// the same endpoints are representable even though the text format collapses
// them.
struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
};

// Nonempty sequence of edge ids with matching ends.
struct Path {
  std::vector<EdgeId> edges;
};

struct UniformityReport {
  bool uniform = true;
  // populated when uniform is false: v has children u, w in distinct classes
  VertexId v = 0, u = 0, w = 0;
};

// A finite layered directed graph with levels 0..height and a unique minimal
// vertex "*" at level 0.  Immutable once built; all queries are const and
// safe to call concurrently.
class LayeredGraph {
 public:
  int height() const { return height_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  int level(VertexId v) const { return vertices_.at(v).level; }
  const std::string& name(VertexId v) const { return vertices_.at(v).name; }

  std::optional<VertexId> find_vertex(std::string_view name) const;

  // All vertices sorted by descending level, then name ascending.  This is
  // the canonical order used for letters, words and serialization.
  const std::vector<VertexId>& canonical_vertices() const { return canonical_; }

  // Out-edges of v sorted by (head canonical rank, edge id).
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_.at(v); }

  // The distinguished out-edge of a positive-level vertex; kNoEdge when the
  // vertex has none (invalid graphs only).
  EdgeId distinguished(VertexId v) const { return distinguished_.at(v); }

  // Every invariant violation as a human-readable description.  An empty
  // result means the graph satisfies the layered-graph hypotheses.
  std::vector<std::string> validate() const;

  // True iff a directed path from v to w exists (paths are nonempty).
  bool greater_than(VertexId v, VertexId w) const;

  // Vertices of level(v) - i reachable from v, canonical order.  Out-of-range
  // i yields the empty set.
  std::vector<VertexId> s_set(VertexId v, int i) const;

  // Partition of s_set(v, 1) into classes of the equivalence generated by
  // "u ~ w when u and w have a common child".  Requires level(v) >= 2.
  std::vector<std::vector<VertexId>> sim_classes(VertexId v) const;

  // A graph is uniform when every such partition is a single class.
  UniformityReport uniformity() const;

  // All directed paths from v to w, depth-first in canonical edge order.
  // Throws CapExceeded if more than cap paths exist.
  std::vector<Path> enumerate_paths(VertexId v, VertexId w,
                                    std::size_t cap) const;

  // v = t0, t1, ..., t_level(v) = * obtained by following distinguished
  // edges.
  std::vector<VertexId> tower(VertexId v) const;

  VertexId path_tail(const Path& p) const { return edge(p.edges.front()).tail; }
  VertexId path_head(const Path& p) const { return edge(p.edges.back()).head; }
  std::vector<VertexId> path_vertices(const Path& p) const;

 private:
  friend class GraphBuilder;
  LayeredGraph() = default;

  int height_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> distinguished_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<VertexId> canonical_;
  std::vector<std::size_t> rank_;  // position in canonical order, per vertex
  std::map<std::string, VertexId, std::less<>> by_name_;
  std::vector<std::vector<bool>> reach_;  // reach_[v][w]: path v -> w exists
};

// Assembles a LayeredGraph.  Structural mistakes that make the data
// meaningless (duplicate names, unknown endpoints) throw immediately;
// semantic violations of the layered hypotheses are left for validate().
class GraphBuilder {
 public:
  explicit GraphBuilder(int height);

  VertexId add_vertex(std::string name, int level);
  EdgeId add_edge(VertexId tail, VertexId head);
  EdgeId add_edge(std::string_view tail, std::string_view head);

  // Overrides the default distinguished-edge rule (least (head name, id))
  // for one vertex; e must leave v.
  void set_distinguished(VertexId v, EdgeId e);

  LayeredGraph build();

 private:
  bool built_ = false;
  LayeredGraph g_;
};

// Test families.
LayeredGraph hypercube(int n);
LayeredGraph chain(int n);
LayeredGraph complete_layered(const std::vector<int>& sizes);

// Fixed non-uniform example: v covers u and w whose child sets are disjoint.
LayeredGraph non_uniform_witness();

// Line-oriented text format:
//
//   layered-graph v1
//   height <n>
//   vertex <name> <level>
//   edge <tailname> <headname>
//
// '#' starts a comment.  The serializer emits vertices in canonical order
// and edges sorted by (tail, head); parse/serialize round-trips are
// byte-identical on canonical output.
LayeredGraph parse_graph(std::istream& in);
LayeredGraph parse_graph_string(const std::string& text);
std::string serialize_graph(const LayeredGraph& g);

}  // namespace lga
