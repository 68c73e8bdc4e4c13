#pragma once

// Brute-force reference implementations. They read only the raw edge or arc
// lists, never the library's algorithms, and are meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "ecpart/core.hpp"

namespace oracle {

using ecpart::Color;
using ecpart::Digraph;
using ecpart::EdgeColoredGraph;
using ecpart::Vertex;
using ecpart::VertexSet;

constexpr std::int64_t kNone = -1;

inline std::vector<std::vector<std::int64_t>> color_matrix(const EdgeColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, kNone));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = e.color;
  return m;
}

inline std::size_t colors_seen(const std::vector<std::vector<std::int64_t>>& m, Vertex v,
                               const std::vector<char>& member) {
  std::set<std::int64_t> cs;
  for (Vertex w = 0; w < m.size(); ++w) {
    if (member[w] && m[v][w] != kNone) cs.insert(m[v][w]);
  }
  return cs.size();
}

/// Depth-first enumeration of cycles with minimum vertex s, extending only
/// along edges whose color differs from the previous one.
inline bool has_pc_cycle(const EdgeColoredGraph& g) {
  const auto m = color_matrix(g);
  const std::size_t n = g.vertex_count();
  std::vector<char> on(n, 0);
  std::function<bool(Vertex, Vertex, std::int64_t, std::int64_t, std::size_t)> dfs =
      [&](Vertex s, Vertex v, std::int64_t first, std::int64_t last, std::size_t len) {
        if (len >= 3 && m[v][s] != kNone && m[v][s] != last && m[v][s] != first) return true;
        for (Vertex w = s + 1; w < n; ++w) {
          if (on[w] || m[v][w] == kNone || m[v][w] == last) continue;
          on[w] = 1;
          const bool hit = dfs(s, w, len == 1 ? m[v][w] : first, m[v][w], len + 1);
          on[w] = 0;
          if (hit) return true;
        }
        return false;
      };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    const bool hit = dfs(s, s, kNone, kNone, 1);
    on[s] = 0;
    if (hit) return true;
  }
  return false;
}

/// Union of every vertex subset inducing minimum color degree >= 2.
inline VertexSet two_color_core(const EdgeColoredGraph& g) {
  const auto m = color_matrix(g);
  const std::size_t n = g.vertex_count();
  std::vector<char> in_union(n, 0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<char> member(n, 0);
    for (Vertex v = 0; v < n; ++v) member[v] = (mask >> v) & 1;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (member[v] && colors_seen(m, v, member) < 2) ok = false;
    }
    if (ok) {
      for (Vertex v = 0; v < n; ++v) in_union[v] |= member[v];
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (in_union[v]) out.push_back(v);
  }
  return out;
}

/// Every assignment of vertices to parts, no pruning.
inline std::optional<std::vector<VertexSet>> feasible_partition(const EdgeColoredGraph& g,
                                                                const std::vector<int>& targets) {
  const auto m = color_matrix(g);
  const std::size_t n = g.vertex_count();
  const std::size_t k = targets.size();
  std::vector<std::size_t> part(n, 0);
  for (;;) {
    std::vector<std::vector<char>> member(k, std::vector<char>(n, 0));
    for (Vertex v = 0; v < n; ++v) member[part[v]][v] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = std::count(member[i].begin(), member[i].end(), 1) > 0;
    }
    for (Vertex v = 0; v < n && ok; ++v) {
      ok = colors_seen(m, v, member[part[v]]) >= static_cast<std::size_t>(targets[part[v]]);
    }
    if (ok) {
      std::vector<VertexSet> parts(k);
      for (Vertex v = 0; v < n; ++v) parts[part[v]].push_back(v);
      return parts;
    }
    std::size_t i = 0;
    while (i < n && ++part[i] == k) part[i++] = 0;
    if (i == n) return std::nullopt;
  }
}

/// P(at most x0 colors present) by listing all placements: returns the
/// number of favourable placements out of 2^(Σ x_i).
inline std::uint64_t favourable_placements(const std::vector<std::size_t>& xs,
                                           std::size_t x0) {
  std::vector<std::size_t> color_of;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs[i]; ++j) color_of.push_back(i);
  }
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << color_of.size()); ++mask) {
    std::set<std::size_t> present;
    for (std::size_t b = 0; b < color_of.size(); ++b) {
      if ((mask >> b) & 1) present.insert(color_of[b]);
    }
    if (present.size() <= x0) ++count;
  }
  return count;
}

/// Vertex masks of every directed cycle (length >= 2).
inline std::vector<std::uint32_t> dicycle_masks(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : d.arcs()) arc[u][v] = 1;
  std::set<std::uint32_t> out;
  std::function<void(Vertex, Vertex, std::uint32_t)> dfs = [&](Vertex s, Vertex v,
                                                              std::uint32_t mask) {
    for (Vertex w = s; w < n; ++w) {
      if (!arc[v][w]) continue;
      if (w == s) {
        out.insert(mask);
      } else if (!((mask >> w) & 1)) {
        dfs(s, w, mask | (1u << w));
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) dfs(s, s, 1u << s);
  return {out.begin(), out.end()};
}

inline bool has_k_disjoint_dicycles(const Digraph& d, std::size_t k) {
  const auto masks = dicycle_masks(d);
  std::function<bool(std::size_t, std::size_t, std::uint32_t)> pick =
      [&](std::size_t from, std::size_t left, std::uint32_t used) {
        if (left == 0) return true;
        for (std::size_t i = from; i < masks.size(); ++i) {
          if ((masks[i] & used) == 0 && pick(i + 1, left - 1, used | masks[i])) return true;
        }
        return false;
      };
  return pick(0, k, 0);
}

/// Whether some x1 y1 x2 y2 is a properly colored 4-cycle.
inline bool has_pc_c4(const EdgeColoredGraph& g, const VertexSet& x, const VertexSet& y) {
  const auto m = color_matrix(g);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      for (std::size_t p = 0; p < y.size(); ++p) {
        for (std::size_t q = p + 1; q < y.size(); ++q) {
          const auto a = m[x[i]][y[p]], b = m[y[p]][x[j]], c = m[x[j]][y[q]],
                     e = m[y[q]][x[i]];
          if (a != b && b != c && c != e && e != a) return true;
        }
      }
    }
  }
  return false;
}

/// Color degree of v in the head-colored image of d, counted from arcs.
inline std::size_t image_color_degree(const Digraph& d, Vertex v) {
  std::set<Vertex> colors;
  for (const auto& [a, b] : d.arcs()) {
    if (a == v || b == v) colors.insert(b);
  }
  return colors.size();
}

}  // namespace oracle
