#include "ecpart/generators.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ecpart/errors.hpp"
#include "ecpart/structures.hpp"

namespace ecpart {

namespace {

constexpr Color kNoEdge = UINT32_MAX;

// Dense symmetric color matrix used while a graph is being built.
class ColorMatrix {
 public:
  explicit ColorMatrix(std::size_t n) : n_(n), cells_(n * n, kNoEdge) {}

  Color get(Vertex u, Vertex v) const { return cells_[u * n_ + v]; }
  void set(Vertex u, Vertex v, Color c) {
    cells_[u * n_ + v] = c;
    cells_[v * n_ + u] = c;
  }

  std::size_t color_degree(Vertex v) const {
    ColorSet cs;
    for (Vertex w = 0; w < n_; ++w) {
      if (get(v, w) != kNoEdge) cs.push_back(get(v, w));
    }
    std::sort(cs.begin(), cs.end());
    return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
  }

  EdgeColoredGraph build() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (get(u, v) != kNoEdge) edges.push_back({u, v, get(u, v)});
      }
    }
    return EdgeColoredGraph(n_, std::move(edges));
  }

  // Recolors a random edge at v whose color v sees at least twice.
  bool recolor_repeated(Vertex v, Color fresh, Rng& rng) {
    std::vector<Vertex> options;
    for (Vertex w = 0; w < n_; ++w) {
      const Color c = get(v, w);
      if (c == kNoEdge) continue;
      std::size_t uses = 0;
      for (Vertex x = 0; x < n_; ++x) uses += get(v, x) == c ? 1 : 0;
      if (uses >= 2) options.push_back(w);
    }
    if (options.empty()) return false;
    set(v, options[rng.below(options.size())], fresh);
    return true;
  }

 private:
  std::size_t n_;
  std::vector<Color> cells_;
};

}  // namespace

EdgeColoredGraph rainbow_complete(std::size_t n) {
  std::vector<Edge> edges;
  Color next = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, next++});
  }
  return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph pc_cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::kInvalidArgument, "a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    Color c = i % 2 == 0 ? 1 : 2;
    if (n % 2 == 1 && i + 1 == n) c = 3;
    edges.push_back({i, static_cast<Vertex>((i + 1) % n), c});
  }
  return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph g_bowtie_graph(std::size_t p, std::size_t q, std::size_t ell) {
  if (p < 3 || q < 3) throw Error(Errc::kInvalidArgument, "cycles need at least 3 vertices");
  constexpr Color kAlpha = 1, kBeta = 2;
  auto other = [](Color c) { return c == kAlpha ? kBeta : kAlpha; };
  std::vector<Edge> edges;

  constexpr Color kGamma = 3;
  // Walks the cycle from its attachment vertex, alternating colors, so that
  // the first and last edge share `first`.
  auto add_cycle = [&](const std::vector<Vertex>& cycle, Color first) {
    const std::size_t len = cycle.size();
    Color c = first;
    for (std::size_t i = 0; i < len; ++i) {
      Color use = c;
      if (len % 2 == 0 && i == len - 2) use = kGamma;
      if (i == len - 1) use = first;
      edges.push_back({cycle[i], cycle[(i + 1) % len], use});
      c = other(c);
    }
  };

  std::vector<Vertex> cycle1(p);
  for (Vertex i = 0; i < p; ++i) cycle1[i] = i;
  add_cycle(cycle1, kAlpha);

  Vertex next = static_cast<Vertex>(p);
  Vertex attach2 = 0;
  Color cycle2_color = kBeta;
  if (ell > 0) {
    Vertex prev = 0;
    Color c = kBeta;
    for (std::size_t i = 0; i < ell; ++i) {
      const Vertex v = next++;
      edges.push_back({prev, v, c});
      prev = v;
      cycle2_color = other(c);
      c = other(c);
    }
    attach2 = prev;
  }
  std::vector<Vertex> cycle2{attach2};
  for (std::size_t i = 1; i < q; ++i) cycle2.push_back(next++);
  add_cycle(cycle2, cycle2_color);
  return EdgeColoredGraph(next, std::move(edges));
}

EdgeColoredGraph random_ecg(std::size_t n, double edge_prob, std::size_t color_count,
                            std::uint64_t seed) {
  if (edge_prob < 0.0 || edge_prob > 1.0) {
    throw Error(Errc::kInvalidArgument, "edge probability outside [0,1]");
  }
  if (color_count == 0) throw Error(Errc::kInvalidArgument, "color_count must be positive");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(edge_prob)) {
        edges.push_back({u, v, static_cast<Color>(rng.below(color_count))});
      }
    }
  }
  return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph random_ecg_min_cdeg(std::size_t n, std::size_t delta_c,
                                     std::size_t color_count, std::uint64_t seed,
                                     MinColorDegreeOptions opts) {
  if (n == 0 || delta_c > n - 1 || delta_c > color_count) {
    throw Error(Errc::kUnsatisfiable,
                "color degree " + std::to_string(delta_c) + " is impossible with " +
                    std::to_string(n) + " vertices and " + std::to_string(color_count) +
                    " colors");
  }
  const auto base = random_ecg(n, opts.edge_prob, color_count, seed);
  ColorMatrix m(n);
  for (const auto& e : base.edges()) m.set(e.u, e.v, e.color);

  Rng rng(seed, 1);
  auto fresh = static_cast<Color>(color_count);
  for (std::size_t attempt = 0;; ++attempt) {
    std::optional<Vertex> low;
    for (Vertex v = 0; v < n && !low; ++v) {
      if (m.color_degree(v) < delta_c) low = v;
    }
    if (!low) return m.build();
    if (attempt >= opts.max_attempts) {
      throw Error(Errc::kAttemptsExhausted, "repair did not reach the color degree");
    }
    std::vector<Vertex> strangers;
    for (Vertex w = 0; w < n; ++w) {
      if (w != *low && m.get(*low, w) == kNoEdge) strangers.push_back(w);
    }
    if (!strangers.empty()) {
      m.set(*low, strangers[rng.below(strangers.size())], fresh++);
    } else if (m.recolor_repeated(*low, fresh, rng)) {
      ++fresh;
    } else {
      throw Error(Errc::kInvariantViolation, "saturated vertex without a repeated color");
    }
  }
}

InternalColoring rainbow_internal(Color first_color) {
  return [first_color](std::size_t size, Rng&) {
    std::vector<Edge> edges;
    Color next = first_color;
    for (Vertex u = 0; u < size; ++u) {
      for (Vertex v = u + 1; v < size; ++v) edges.push_back({u, v, next++});
    }
    return EdgeColoredGraph(size, std::move(edges));
  };
}

InternalColoring monochromatic_internal(Color color) {
  return [color](std::size_t size, Rng&) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < size; ++u) {
      for (Vertex v = u + 1; v < size; ++v) edges.push_back({u, v, color});
    }
    return EdgeColoredGraph(size, std::move(edges));
  };
}

InternalColoring random_internal(Color first_color, std::size_t count) {
  if (count == 0) throw Error(Errc::kInvalidArgument, "empty internal palette");
  return [first_color, count](std::size_t size, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < size; ++u) {
      for (Vertex v = u + 1; v < size; ++v) {
        edges.push_back({u, v, first_color + static_cast<Color>(rng.below(count))});
      }
    }
    return EdgeColoredGraph(size, std::move(edges));
  };
}

EdgeColoredGraph gallai_blowup(std::span<const std::size_t> part_sizes,
                               const InternalColoring& internal,
                               std::span<const Color> crossing_colors, std::uint64_t seed,
                               bool rainbow_triangle_free) {
  if (part_sizes.size() < 2) throw Error(Errc::kInvalidArgument, "need at least two parts");
  if (crossing_colors.empty() || crossing_colors.size() > 2) {
    throw Error(Errc::kInvalidArgument, "need one or two crossing colors");
  }
  std::vector<Vertex> offset{0};
  for (std::size_t s : part_sizes) {
    if (s == 0) throw Error(Errc::kInvalidArgument, "parts must be nonempty");
    offset.push_back(offset.back() + static_cast<Vertex>(s));
  }
  const std::size_t n = offset.back();
  ColorMatrix m(n);

  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    Rng part_rng(seed, 1 + i);
    const auto inner = internal(part_sizes[i], part_rng);
    if (inner.vertex_count() != part_sizes[i] || !inner.is_complete()) {
      throw Error(Errc::kInvalidArgument, "internal coloring must color K_size");
    }
    for (Color c : inner.colors()) {
      if (std::find(crossing_colors.begin(), crossing_colors.end(), c) !=
          crossing_colors.end()) {
        throw Error(Errc::kPaletteCollision,
                    "color " + std::to_string(c) + " is both internal and crossing");
      }
    }
    if (rainbow_triangle_free && find_rainbow_triangle(inner)) {
      throw Error(Errc::kRainbowTrianglePresent,
                  "part " + std::to_string(i) + " contains a rainbow triangle");
    }
    for (const auto& e : inner.edges()) m.set(offset[i] + e.u, offset[i] + e.v, e.color);
  }

  Rng rng(seed, 0);
  for (std::size_t i = 0; i < part_sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < part_sizes.size(); ++j) {
      const Color c = crossing_colors[rng.below(crossing_colors.size())];
      for (Vertex u = offset[i]; u < offset[i + 1]; ++u) {
        for (Vertex v = offset[j]; v < offset[j + 1]; ++v) m.set(u, v, c);
      }
    }
  }
  return m.build();
}

EdgeColoredGraph random_complete_bipartite(std::size_t m, std::size_t n,
                                           std::size_t color_count, std::size_t min_cdeg,
                                           std::uint64_t seed) {
  if (m == 0 || n == 0 || color_count == 0) {
    throw Error(Errc::kInvalidArgument, "sides and palette must be nonempty");
  }
  if (min_cdeg > std::min(m, n)) {
    throw Error(Errc::kUnsatisfiable, "color degree exceeds the opposite side");
  }
  Rng rng(seed);
  ColorMatrix mat(m + n);
  for (Vertex x = 0; x < m; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      mat.set(x, static_cast<Vertex>(m + y), static_cast<Color>(rng.below(color_count)));
    }
  }
  auto fresh = static_cast<Color>(color_count);
  for (;;) {
    std::optional<Vertex> low;
    for (Vertex v = 0; v < m + n && !low; ++v) {
      if (mat.color_degree(v) < min_cdeg) low = v;
    }
    if (!low) return mat.build();
    if (!mat.recolor_repeated(*low, fresh++, rng)) {
      throw Error(Errc::kInvariantViolation, "deficient vertex without a repeated color");
    }
  }
}

// --- digraphs ----------------------------------------------------------------

namespace {

class ArcMatrix {
 public:
  explicit ArcMatrix(std::size_t n) : n_(n), arc_(n * n, 0), out_(n, 0) {}

  bool has(Vertex u, Vertex v) const { return arc_[u * n_ + v] != 0; }
  bool adjacent(Vertex u, Vertex v) const { return has(u, v) || has(v, u); }
  std::size_t out_degree(Vertex v) const { return out_[v]; }

  void add(Vertex u, Vertex v) {
    arc_[u * n_ + v] = 1;
    ++out_[u];
  }
  void reverse(Vertex u, Vertex v) {
    arc_[u * n_ + v] = 0;
    --out_[u];
    add(v, u);
  }

  Digraph build() const {
    std::vector<Digraph::Arc> arcs;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (has(u, v)) arcs.emplace_back(u, v);
      }
    }
    return Digraph(n_, std::move(arcs), true);
  }

 private:
  std::size_t n_;
  std::vector<char> arc_;
  std::vector<std::size_t> out_;
};

}  // namespace

Digraph random_oriented(std::size_t n, std::size_t min_outdeg, std::uint64_t seed,
                        double arc_prob) {
  if (2 * min_outdeg + 1 > n && !(min_outdeg == 0)) {
    throw Error(Errc::kUnsatisfiable,
                "an oriented graph on " + std::to_string(n) +
                    " vertices cannot have minimum out-degree " + std::to_string(min_outdeg));
  }
  Rng rng(seed);
  ArcMatrix a(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(arc_prob)) {
        if (rng.coin()) a.add(u, v); else a.add(v, u);
      }
    }
  }

  for (;;) {
    std::optional<Vertex> low;
    for (Vertex v = 0; v < n && !low; ++v) {
      if (a.out_degree(v) < min_outdeg) low = v;
    }
    if (!low) return a.build();
    const Vertex v = *low;

    std::vector<Vertex> strangers;
    for (Vertex w = 0; w < n; ++w) {
      if (w != v && !a.adjacent(v, w)) strangers.push_back(w);
    }
    if (!strangers.empty()) {
      a.add(v, strangers[rng.below(strangers.size())]);
      continue;
    }

    // Reverse a directed path x -> ... -> v from a vertex with spare out-degree.
    std::vector<Vertex> next(n, UINT32_MAX);
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{v};
    seen[v] = 1;
    std::optional<Vertex> donor;
    while (!queue.empty() && !donor) {
      const Vertex w = queue.front();
      queue.pop_front();
      for (Vertex u = 0; u < n; ++u) {
        if (seen[u] || !a.has(u, w)) continue;
        seen[u] = 1;
        next[u] = w;
        if (a.out_degree(u) > min_outdeg) {
          donor = u;
          break;
        }
        queue.push_back(u);
      }
    }
    if (donor) {
      for (Vertex u = *donor; u != v; u = next[u]) a.reverse(u, next[u]);
      continue;
    }

    // Every vertex that reaches v is saturated: add an arc out of that set.
    std::vector<std::pair<Vertex, Vertex>> options;
    for (Vertex u = 0; u < n; ++u) {
      if (!seen[u]) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (w != u && !a.adjacent(u, w)) options.emplace_back(u, w);
      }
    }
    if (options.empty()) {
      throw Error(Errc::kInvariantViolation, "out-degree repair cannot make progress");
    }
    const auto [u, w] = options[rng.below(options.size())];
    a.add(u, w);
  }
}

Digraph random_tournament(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Digraph::Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.coin()) arcs.emplace_back(u, v); else arcs.emplace_back(v, u);
    }
  }
  return Digraph(n, std::move(arcs), true);
}

Digraph rotational_tournament(std::size_t n) {
  if (n % 2 == 0) throw Error(Errc::kInvalidArgument, "rotational tournaments need odd n");
  const std::size_t m = n / 2;
  std::vector<Digraph::Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      arcs.emplace_back(i, static_cast<Vertex>((i + j) % n));
    }
  }
  return Digraph(n, std::move(arcs), true);
}

}  // namespace ecpart
