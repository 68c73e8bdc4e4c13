#include <algorithm>
#include <map>
#include <string>

#include "ecpart/errors.hpp"
#include "ecpart/partition.hpp"
#include "ecpart/structures.hpp"

namespace ecpart {

bool is_gallai_partition(const EdgeColoredGraph& k, std::span<const VertexSet> parts) {
  const std::size_t n = k.vertex_count();
  if (parts.size() < 2 || !k.is_complete()) return false;
  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) return false;
    for (Vertex v : parts[i]) {
      if (v >= n || part_of[v] >= 0) return false;
      part_of[v] = static_cast<int>(i);
    }
  }
  if (std::count(part_of.begin(), part_of.end(), -1) != 0) return false;

  std::map<std::pair<int, int>, Color> pair_color;
  ColorSet crossing;
  for (const auto& e : k.edges()) {
    int a = part_of[e.u], b = part_of[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    auto [it, inserted] = pair_color.emplace(std::make_pair(a, b), e.color);
    if (!inserted && it->second != e.color) return false;
    crossing.push_back(e.color);
  }
  std::sort(crossing.begin(), crossing.end());
  crossing.erase(std::unique(crossing.begin(), crossing.end()), crossing.end());
  return crossing.size() <= 2;
}

namespace {

// Components of the graph after deleting every edge of color `c`.
std::vector<int> components_without(const EdgeColoredGraph& g, Color c, int& count) {
  std::vector<int> comp(g.vertex_count(), -1);
  count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(v)) {
        if (nb.color != c && comp[nb.vertex] < 0) {
          comp[nb.vertex] = count;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++count;
  }
  return comp;
}

// Restricted-growth enumeration of set partitions into exactly `t` blocks,
// keeping each pair of blocks monochromatic and at most two colors between
// blocks overall.
class GallaiSearch {
 public:
  GallaiSearch(const EdgeColoredGraph& k, std::size_t t)
      : k_(k), t_(t), block_(k.vertex_count(), -1), pair_color_(t * t, kUnset) {}

  std::optional<std::vector<VertexSet>> run() {
    if (!search(0, 0)) return std::nullopt;
    std::vector<VertexSet> parts(t_);
    for (Vertex v = 0; v < k_.vertex_count(); ++v) {
      parts[static_cast<std::size_t>(block_[v])].push_back(v);
    }
    return parts;
  }

 private:
  static constexpr Color kUnset = UINT32_MAX;

  bool place(Vertex v, std::size_t b, std::vector<std::size_t>& set_now) {
    for (Vertex u = 0; u < v; ++u) {
      const auto bu = static_cast<std::size_t>(block_[u]);
      if (bu == b) continue;
      const Color c = *k_.edge_color(u, v);
      const std::size_t slot = std::min(bu, b) * t_ + std::max(bu, b);
      if (pair_color_[slot] == kUnset) {
        pair_color_[slot] = c;
        set_now.push_back(slot);
        if (++color_uses_[c] == 1 && color_uses_.size() > 2) return false;
      } else if (pair_color_[slot] != c) {
        return false;
      }
    }
    return true;
  }

  void unplace(const std::vector<std::size_t>& set_now) {
    for (std::size_t slot : set_now) {
      const Color c = pair_color_[slot];
      if (--color_uses_[c] == 0) color_uses_.erase(c);
      pair_color_[slot] = kUnset;
    }
  }

  bool search(Vertex v, std::size_t used) {
    const std::size_t n = k_.vertex_count();
    if (v == n) return used == t_;
    if (t_ - used > n - v) return false;
    const std::size_t limit = std::min(used + 1, t_);
    for (std::size_t b = 0; b < limit; ++b) {
      block_[v] = static_cast<int>(b);
      std::vector<std::size_t> set_now;
      if (place(v, b, set_now) && search(v + 1, std::max(used, b + 1))) return true;
      unplace(set_now);
      block_[v] = -1;
    }
    return false;
  }

  const EdgeColoredGraph& k_;
  std::size_t t_;
  std::vector<int> block_;
  std::vector<Color> pair_color_;
  std::map<Color, int> color_uses_;
};

}  // namespace

GallaiPartition gallai_partition(const EdgeColoredGraph& k) {
  if (!k.is_complete()) throw Error(Errc::kNotComplete, "graph is not complete");
  if (k.vertex_count() < 2) {
    throw Error(Errc::kPreconditionViolated, "a Gallai partition needs two vertices");
  }
  if (find_rainbow_triangle(k)) {
    throw Error(Errc::kRainbowTrianglePresent, "graph contains a rainbow triangle");
  }

  std::optional<std::vector<VertexSet>> parts;
  if (k.colors().size() <= 2) {
    parts.emplace();
    for (Vertex v = 0; v < k.vertex_count(); ++v) parts->push_back({v});
  }
  for (Color c : k.colors()) {
    if (parts) break;
    int count = 0;
    const auto comp = components_without(k, c, count);
    if (count < 2) continue;
    parts.emplace(2);
    for (Vertex v = 0; v < k.vertex_count(); ++v) {
      (*parts)[comp[v] == comp[0] ? 0 : 1].push_back(v);
    }
    break;
  }
  for (std::size_t t = 3; !parts && t <= k.vertex_count(); ++t) {
    parts = GallaiSearch(k, t).run();
  }
  if (!parts || !is_gallai_partition(k, *parts)) {
    throw Error(Errc::kInvariantViolation,
                "no Gallai partition found for a rainbow-triangle-free complete graph");
  }

  GallaiPartition out{std::move(*parts), {}};
  std::vector<std::size_t> part_of(k.vertex_count());
  for (std::size_t i = 0; i < out.parts.size(); ++i) {
    for (Vertex v : out.parts[i]) part_of[v] = i;
  }
  for (const auto& e : k.edges()) {
    if (part_of[e.u] != part_of[e.v]) out.crossing_colors.push_back(e.color);
  }
  std::sort(out.crossing_colors.begin(), out.crossing_colors.end());
  out.crossing_colors.erase(
      std::unique(out.crossing_colors.begin(), out.crossing_colors.end()),
      out.crossing_colors.end());
  return out;
}

namespace {

PartitionCertificate certify_two(const EdgeColoredGraph& g, VertexSet b, int a,
                                 const char* who) {
  const auto in_b = membership(b, g.vertex_count());
  VertexSet rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_b[v]) rest.push_back(v);
  }
  std::vector<VertexSet> parts{std::move(rest), std::move(b)};
  const PartitionTargets targets({a, 2});
  auto check = check_partition(g, parts, targets);
  if (!check.ok()) {
    throw Error(Errc::kCertificateCheckFailure,
                std::string(who) + ": vertex " +
                    std::to_string(check.deficiencies.front().vertex) +
                    " misses its target");
  }
  return std::move(*check.certificate);
}

}  // namespace

CompleteA2Result partition_complete_a2(const EdgeColoredGraph& k, int a) {
  if (a < 1) throw Error(Errc::kInvalidArgument, "a must be at least 1");
  if (!k.is_complete()) throw Error(Errc::kNotComplete, "graph is not complete");
  if (k.vertex_count() < 2) {
    throw Error(Errc::kPreconditionViolated, "a partition needs at least two vertices");
  }
  const std::size_t need = static_cast<std::size_t>(a) + 3;
  if (min_color_degree(k) < need) {
    throw Error(Errc::kPreconditionViolated,
                "minimum color degree " + std::to_string(min_color_degree(k)) +
                    " is below a + 3 = " + std::to_string(need));
  }

  if (auto tri = find_rainbow_triangle(k)) {
    VertexSet b(tri->vertices.begin(), tri->vertices.end());
    std::sort(b.begin(), b.end());
    return {certify_two(k, std::move(b), a, "rainbow-triangle route"),
            CompleteRoute::kRainbowTriangle};
  }
  // V_1 loses at most the two crossing colors; every other vertex loses the
  // single color it sends to V_1.
  auto gallai = gallai_partition(k);
  return {certify_two(k, std::move(gallai.parts[0]), a, "Gallai route"),
          CompleteRoute::kGallai};
}

PartitionCertificate partition_bipartite_a2(const EdgeColoredGraph& g,
                                            std::span<const Vertex> x,
                                            std::span<const Vertex> y, int a) {
  if (a < 1) throw Error(Errc::kInvalidArgument, "a must be at least 1");
  if (!is_complete_bipartite(g, x, y)) {
    throw Error(Errc::kNotCompleteBipartite,
                "graph is not complete bipartite between the given sides");
  }
  const std::size_t need = static_cast<std::size_t>(a) + 2;
  if (min_color_degree(g) < need) {
    throw Error(Errc::kPreconditionViolated,
                "minimum color degree " + std::to_string(min_color_degree(g)) +
                    " is below a + 2 = " + std::to_string(need));
  }
  auto c4 = find_pc_c4_bipartite(g, x, y);
  if (!c4) {
    throw Error(Errc::kInvariantViolation,
                "complete bipartite graph with color degree >= 3 has no PC C4");
  }
  VertexSet b = c4->vertices;
  std::sort(b.begin(), b.end());
  return certify_two(g, std::move(b), a, "bipartite route");
}

}  // namespace ecpart
