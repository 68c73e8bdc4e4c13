#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ecpart {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free list of colors.
using ColorSet = std::vector<Color>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  Color color = 0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Simple undirected graph with one color per edge.
///
/// Construction normalizes every edge to u < v, sorts the edge list and
/// rejects self-loops, repeated pairs and out-of-range ids. The value is
/// immutable afterwards; adjacency lists are sorted by neighbor id.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Canonical edge list: u < v, lexicographically sorted.
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::optional<Color> edge_color(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return edge_color(u, v).has_value(); }

  /// All colors in use, sorted.
  ColorSet colors() const;

  bool is_complete() const noexcept;

  friend bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Directed graph without self-loops or repeated arcs. When `oriented` is set
/// the graph may not contain both (u,v) and (v,u).
class Digraph {
 public:
  using Arc = std::pair<Vertex, Vertex>;

  Digraph() = default;
  Digraph(std::size_t vertex_count, std::vector<Arc> arcs, bool oriented = false);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  bool oriented() const noexcept { return oriented_; }

  /// Sorted arc list.
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }
  bool has_arc(Vertex u, Vertex v) const;

  /// True when no pair of opposite arcs is present, regardless of the flag.
  bool has_no_digons() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count() == b.vertex_count() && a.oriented_ == b.oriented_ &&
           a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  bool oriented_ = false;
};

/// Per-part minimum color degree targets a_1..a_k, each at least 1.
class PartitionTargets {
 public:
  explicit PartitionTargets(std::vector<int> targets);

  /// k copies of `value`.
  static PartitionTargets uniform(std::size_t k, int value);

  std::size_t size() const noexcept { return targets_.size(); }
  int operator[](std::size_t i) const { return targets_[i]; }
  std::span<const int> values() const noexcept { return targets_; }

  /// Sum of (a_i - 1) + 1: the color degree that lets any disjoint feasible
  /// seeds be extended to a full partition.
  int extension_threshold() const noexcept;

  friend bool operator==(const PartitionTargets&, const PartitionTargets&) = default;

 private:
  std::vector<int> targets_;
};

// --- color-degree analytics -------------------------------------------------

std::size_t color_degree(const EdgeColoredGraph& g, Vertex v);

/// Distinct colors of v restricted to neighbors with `member[w] != 0`.
ColorSet colors_into(const EdgeColoredGraph& g, Vertex v,
                     std::span<const char> member);
std::size_t color_degree_into(const EdgeColoredGraph& g, Vertex v,
                              std::span<const char> member);

std::size_t min_color_degree(const EdgeColoredGraph& g);

/// Colors on edges with one end in `m` and the other in `n`.
ColorSet color_set_between(const EdgeColoredGraph& g, std::span<const Vertex> m,
                           std::span<const Vertex> n);

/// Spanning subgraph holding exactly the edges of color `c`.
EdgeColoredGraph color_class(const EdgeColoredGraph& g, Color c);

struct InducedSubgraph {
  EdgeColoredGraph graph;
  /// to_parent[i] is the id in the host graph of local vertex i.
  std::vector<Vertex> to_parent;

  std::optional<Vertex> to_local(Vertex parent) const;
};

InducedSubgraph induced_subgraph(const EdgeColoredGraph& g,
                                 std::span<const Vertex> vertices);

/// Largest vertex set S such that every vertex of S sees at least two colors
/// inside G[S]. Computed by deleting the lowest-indexed violating vertex
/// until none is left.
VertexSet two_color_core(const EdgeColoredGraph& g);

std::size_t min_out_degree(const Digraph& d);

/// Returns a sorted, duplicate-free copy; throws on ids >= n.
VertexSet normalize_vertex_set(std::span<const Vertex> vs, std::size_t n);

/// Membership mask of length n.
std::vector<char> membership(std::span<const Vertex> vs, std::size_t n);

}  // namespace ecpart
