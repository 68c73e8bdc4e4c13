#include "ecpart/core.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ecpart/errors.hpp"

namespace ecpart {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kInvalidGraph: return "InvalidGraph";
    case Errc::kParseError: return "ParseError";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kNotComplete: return "NotComplete";
    case Errc::kNotCompleteBipartite: return "NotCompleteBipartite";
    case Errc::kNotOriented: return "NotOriented";
    case Errc::kRainbowTrianglePresent: return "RainbowTrianglePresent";
    case Errc::kEmptyCore: return "EmptyCore";
    case Errc::kMalformedPartition: return "MalformedPartition";
    case Errc::kPaletteCollision: return "PaletteCollision";
    case Errc::kUnsatisfiable: return "Unsatisfiable";
    case Errc::kAttemptsExhausted: return "AttemptsExhausted";
    case Errc::kMissingOracleValue: return "MissingOracleValue";
    case Errc::kNotGood: return "NotGood";
    case Errc::kInvariantViolation: return "InvariantViolation";
    case Errc::kClassificationFailure: return "ClassificationFailure";
    case Errc::kStuckInvariantViolation: return "StuckInvariantViolation";
    case Errc::kCertificateCheckFailure: return "CertificateCheckFailure";
  }
  return "Unknown";
}

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw Error(Errc::kInvalidArgument,
                "vertex " + std::to_string(v) + " out of range [0," +
                    std::to_string(n) + ")");
  }
}

}  // namespace

// --- EdgeColoredGraph --------------------------------------------------------

EdgeColoredGraph::EdgeColoredGraph(std::size_t vertex_count,
                                   std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  for (auto& e : edges_) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(Errc::kInvalidGraph,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has an endpoint outside [0," +
                      std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) {
      throw Error(Errc::kInvalidGraph,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error(Errc::kInvalidGraph,
                  "repeated edge {" + std::to_string(edges_[i].u) + "," +
                      std::to_string(edges_[i].v) + "}");
    }
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.color});
    adjacency_[e.v].push_back({e.u, e.color});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::span<const Neighbor> EdgeColoredGraph::neighbors(Vertex v) const {
  check_vertex(vertex_count(), v);
  return adjacency_[v];
}

std::optional<Color> EdgeColoredGraph::edge_color(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& list = adjacency_[u];
  auto it = std::lower_bound(
      list.begin(), list.end(), v,
      [](const Neighbor& n, Vertex x) { return n.vertex < x; });
  if (it == list.end() || it->vertex != v) return std::nullopt;
  return it->color;
}

ColorSet EdgeColoredGraph::colors() const {
  ColorSet out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.color);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool EdgeColoredGraph::is_complete() const noexcept {
  const std::size_t n = vertex_count();
  return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// --- Digraph -----------------------------------------------------------------

Digraph::Digraph(std::size_t vertex_count, std::vector<Arc> arcs, bool oriented)
    : arcs_(std::move(arcs)),
      out_(vertex_count),
      in_(vertex_count),
      oriented_(oriented) {
  for (const auto& [u, v] : arcs_) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error(Errc::kInvalidGraph,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint outside [0," +
                      std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw Error(Errc::kInvalidGraph, "self-loop at vertex " + std::to_string(u));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw Error(Errc::kInvalidGraph, "repeated arc");
  }
  for (const auto& [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& l : in_) std::sort(l.begin(), l.end());
  if (oriented_ && !has_no_digons()) {
    throw Error(Errc::kNotOriented,
                "oriented digraph contains a pair of opposite arcs");
  }
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(vertex_count(), v);
  return out_[v];
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  check_vertex(vertex_count(), v);
  return in_[v];
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool Digraph::has_no_digons() const {
  return std::none_of(arcs_.begin(), arcs_.end(),
                      [&](const Arc& a) { return has_arc(a.second, a.first); });
}

// --- PartitionTargets --------------------------------------------------------

PartitionTargets::PartitionTargets(std::vector<int> targets)
    : targets_(std::move(targets)) {
  if (targets_.empty()) {
    throw Error(Errc::kInvalidArgument, "partition targets must be nonempty");
  }
  for (int t : targets_) {
    if (t < 1) {
      throw Error(Errc::kInvalidArgument,
                  "partition target " + std::to_string(t) + " is below 1");
    }
  }
}

PartitionTargets PartitionTargets::uniform(std::size_t k, int value) {
  return PartitionTargets(std::vector<int>(k, value));
}

int PartitionTargets::extension_threshold() const noexcept {
  int sum = 1;
  for (int t : targets_) sum += t - 1;
  return sum;
}

// --- analytics -----------------------------------------------------------------

std::size_t color_degree(const EdgeColoredGraph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  ColorSet cs;
  cs.reserve(nbrs.size());
  for (const auto& n : nbrs) cs.push_back(n.color);
  std::sort(cs.begin(), cs.end());
  return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

ColorSet colors_into(const EdgeColoredGraph& g, Vertex v,
                     std::span<const char> member) {
  ColorSet cs;
  for (const auto& n : g.neighbors(v)) {
    if (member[n.vertex]) cs.push_back(n.color);
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

std::size_t color_degree_into(const EdgeColoredGraph& g, Vertex v,
                              std::span<const char> member) {
  return colors_into(g, v, member).size();
}

std::size_t min_color_degree(const EdgeColoredGraph& g) {
  if (g.vertex_count() == 0) {
    throw Error(Errc::kInvalidArgument, "minimum color degree of an empty graph");
  }
  std::size_t best = SIZE_MAX;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    best = std::min(best, color_degree(g, v));
  }
  return best;
}

ColorSet color_set_between(const EdgeColoredGraph& g, std::span<const Vertex> m,
                           std::span<const Vertex> n) {
  const auto in_m = membership(m, g.vertex_count());
  const auto in_n = membership(n, g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_m[v] && in_n[v]) {
      throw Error(Errc::kInvalidArgument,
                  "vertex sets overlap at " + std::to_string(v));
    }
  }
  ColorSet out;
  for (const auto& e : g.edges()) {
    if ((in_m[e.u] && in_n[e.v]) || (in_m[e.v] && in_n[e.u])) {
      out.push_back(e.color);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeColoredGraph color_class(const EdgeColoredGraph& g, Color c) {
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (e.color == c) kept.push_back(e);
  }
  return EdgeColoredGraph(g.vertex_count(), std::move(kept));
}

std::optional<Vertex> InducedSubgraph::to_local(Vertex parent) const {
  auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<Vertex>(it - to_parent.begin());
}

InducedSubgraph induced_subgraph(const EdgeColoredGraph& g,
                                 std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.to_parent = normalize_vertex_set(vertices, g.vertex_count());
  std::vector<Vertex> local(g.vertex_count(), UINT32_MAX);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    local[out.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] != UINT32_MAX && local[e.v] != UINT32_MAX) {
      edges.push_back({local[e.u], local[e.v], e.color});
    }
  }
  out.graph = EdgeColoredGraph(out.to_parent.size(), std::move(edges));
  return out;
}

namespace {

// Multiset of colors seen by one vertex inside the alive set.
struct ColorCounts {
  std::vector<std::pair<Color, int>> counts;

  void add(Color c) {
    for (auto& [col, n] : counts) {
      if (col == c) {
        ++n;
        return;
      }
    }
    counts.emplace_back(c, 1);
  }

  void remove(Color c) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i].first == c) {
        if (--counts[i].second == 0) {
          counts[i] = counts.back();
          counts.pop_back();
        }
        return;
      }
    }
  }

  std::size_t distinct() const noexcept { return counts.size(); }
};

}  // namespace

VertexSet two_color_core(const EdgeColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<ColorCounts> counts(n);
  for (const auto& e : g.edges()) {
    counts[e.u].add(e.color);
    counts[e.v].add(e.color);
  }
  std::vector<char> alive(n, 1);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> pending;
  std::vector<char> queued(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (counts[v].distinct() < 2) {
      pending.push(v);
      queued[v] = 1;
    }
  }
  while (!pending.empty()) {
    const Vertex v = pending.top();
    pending.pop();
    alive[v] = 0;
    for (const auto& nb : g.neighbors(v)) {
      if (!alive[nb.vertex]) continue;
      counts[nb.vertex].remove(nb.color);
      if (!queued[nb.vertex] && counts[nb.vertex].distinct() < 2) {
        pending.push(nb.vertex);
        queued[nb.vertex] = 1;
      }
    }
  }
  VertexSet core;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) core.push_back(v);
  }
  return core;
}

std::size_t min_out_degree(const Digraph& d) {
  if (d.vertex_count() == 0) {
    throw Error(Errc::kInvalidArgument, "minimum out-degree of an empty digraph");
  }
  std::size_t best = SIZE_MAX;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    best = std::min(best, d.out_degree(v));
  }
  return best;
}

VertexSet normalize_vertex_set(std::span<const Vertex> vs, std::size_t n) {
  VertexSet out(vs.begin(), vs.end());
  for (Vertex v : out) check_vertex(n, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<char> membership(std::span<const Vertex> vs, std::size_t n) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vs) {
    check_vertex(n, v);
    mask[v] = 1;
  }
  return mask;
}

}  // namespace ecpart
