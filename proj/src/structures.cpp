#include "ecpart/structures.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "ecpart/errors.hpp"
#include "ecpart/rng.hpp"

namespace ecpart {

VertexSet MinimalStructure::vertices() const {
  VertexSet out;
  for (const auto& e : edges) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RainbowTriangle> find_rainbow_triangle(const EdgeColoredGraph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (const auto& a : g.neighbors(u)) {
      if (a.vertex <= u) continue;
      for (const auto& b : g.neighbors(a.vertex)) {
        if (b.vertex <= a.vertex || b.color == a.color) continue;
        auto c = g.edge_color(b.vertex, u);
        if (c && *c != a.color && *c != b.color) {
          return RainbowTriangle{{u, a.vertex, b.vertex}, {a.color, b.color, *c}};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Yeo vertex among the alive vertices of g, ignoring isolated ones.
std::optional<Vertex> yeo_vertex_in(const EdgeColoredGraph& g,
                                    const std::vector<char>& alive) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<int> comp(n);
  std::vector<Vertex> stack;
  std::vector<Color> comp_color;
  for (Vertex z = 0; z < n; ++z) {
    if (!alive[z]) continue;
    bool has_edge = false;
    for (const auto& nb : g.neighbors(z)) {
      if (alive[nb.vertex]) {
        has_edge = true;
        break;
      }
    }
    if (!has_edge) continue;

    std::fill(comp.begin(), comp.end(), -1);
    int next = 0;
    comp_color.clear();
    bool ok = true;
    for (const auto& start : g.neighbors(z)) {
      if (!alive[start.vertex]) continue;
      if (comp[start.vertex] < 0) {
        comp[start.vertex] = next;
        stack.assign(1, start.vertex);
        while (!stack.empty()) {
          const Vertex v = stack.back();
          stack.pop_back();
          for (const auto& nb : g.neighbors(v)) {
            if (nb.vertex == z || !alive[nb.vertex] || comp[nb.vertex] >= 0) continue;
            comp[nb.vertex] = next;
            stack.push_back(nb.vertex);
          }
        }
        comp_color.push_back(start.color);
        ++next;
      } else if (comp_color[comp[start.vertex]] != start.color) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  return std::nullopt;
}

bool has_alive_edge(const EdgeColoredGraph& g, const std::vector<char>& alive) {
  for (const auto& e : g.edges()) {
    if (alive[e.u] && alive[e.v]) return true;
  }
  return false;
}

}  // namespace

std::optional<Vertex> find_yeo_vertex(const EdgeColoredGraph& g) {
  return yeo_vertex_in(g, std::vector<char>(g.vertex_count(), 1));
}

bool has_pc_cycle(const EdgeColoredGraph& g) {
  std::vector<char> alive(g.vertex_count(), 1);
  while (has_alive_edge(g, alive)) {
    auto z = yeo_vertex_in(g, alive);
    if (!z) return true;
    alive[*z] = 0;
  }
  return false;
}

bool is_pc_cycle(const EdgeColoredGraph& g, const PCCycle& c) {
  const std::size_t len = c.vertices.size();
  if (len < 3 || c.colors.size() != len) return false;
  VertexSet seen(c.vertices.begin(), c.vertices.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    auto col = g.edge_color(c.vertices[i], c.vertices[(i + 1) % len]);
    if (!col || *col != c.colors[i]) return false;
    if (c.colors[i] == c.colors[(i + 1) % len]) return false;
  }
  return true;
}

SearchResult<PCCycle> find_pc_cycle(const EdgeColoredGraph& g,
                                    std::uint64_t budget) {
  if (!has_pc_cycle(g)) return SearchResult<PCCycle>::absent();

  const auto n = static_cast<Vertex>(g.vertex_count());
  Budget spent(budget);
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<Color> colors;
  Vertex start = 0;
  bool out_of_budget = false;

  // Extends the path ending at v, entered with color `in`. Only vertices
  // above `start` are used so every cycle is found from its minimum vertex.
  std::function<bool(Vertex, Color)> extend = [&](Vertex v, Color in) -> bool {
    if (!spent.spend()) {
      out_of_budget = true;
      return false;
    }
    for (const auto& nb : g.neighbors(v)) {
      if (nb.color == in) continue;
      if (nb.vertex == start) {
        if (path.size() >= 3 && nb.color != colors.front()) {
          colors.push_back(nb.color);
          return true;
        }
        continue;
      }
      if (nb.vertex < start || on_path[nb.vertex]) continue;
      on_path[nb.vertex] = 1;
      path.push_back(nb.vertex);
      colors.push_back(nb.color);
      if (extend(nb.vertex, nb.color)) return true;
      if (out_of_budget) return false;
      on_path[nb.vertex] = 0;
      path.pop_back();
      colors.pop_back();
    }
    return false;
  };

  for (start = 0; start < n; ++start) {
    on_path[start] = 1;
    path.assign(1, start);
    for (const auto& first : g.neighbors(start)) {
      if (first.vertex < start) continue;
      on_path[first.vertex] = 1;
      path.push_back(first.vertex);
      colors.assign(1, first.color);
      if (extend(first.vertex, first.color)) {
        return SearchResult<PCCycle>::found(PCCycle{path, colors}, spent.used());
      }
      if (out_of_budget) return SearchResult<PCCycle>::exhausted(spent.used());
      on_path[first.vertex] = 0;
      path.pop_back();
    }
    on_path[start] = 0;
  }
  throw Error(Errc::kInvariantViolation,
              "peeling found a PC cycle but the exhaustive search did not");
}

// --- minimal structures ------------------------------------------------------

namespace {

std::vector<Vertex> orient_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() >= 3 && cycle[1] > cycle.back()) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

std::vector<Color> cycle_colors(const EdgeColoredGraph& g,
                                const std::vector<Vertex>& cycle) {
  std::vector<Color> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto c = g.edge_color(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (!c) {
      throw Error(Errc::kInvariantViolation, "cycle uses a missing edge");
    }
    out.push_back(*c);
  }
  return out;
}

bool is_connected(const EdgeColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++count;
        stack.push_back(nb.vertex);
      }
    }
  }
  return count == n;
}

[[noreturn]] void classification_failure(const std::string& why) {
  throw Error(Errc::kClassificationFailure, why);
}

// Walks from branch vertex `b` along its edge to `first` through degree-2
// vertices until another branch vertex (possibly b) is reached.
std::vector<Vertex> trace_branch(const EdgeColoredGraph& g, Vertex b,
                                 Vertex first, const std::vector<char>& branch) {
  std::vector<Vertex> seq{b, first};
  Vertex prev = b;
  Vertex cur = first;
  while (!branch[cur]) {
    auto nbrs = g.neighbors(cur);
    const Vertex next = nbrs[0].vertex == prev ? nbrs[1].vertex : nbrs[0].vertex;
    prev = cur;
    cur = next;
    seq.push_back(cur);
    if (seq.size() > g.vertex_count() + 1) classification_failure("trace did not terminate");
  }
  return seq;
}

MinimalStructure remap(MinimalStructure m, const std::vector<Vertex>& to_parent) {
  auto map_all = [&](std::vector<Vertex>& vs) {
    for (auto& v : vs) v = to_parent[v];
  };
  if (m.kind == StructureKind::kPCCycle) {
    map_all(std::get<PCCycle>(m.payload).vertices);
  } else {
    auto& b = std::get<GBowtie>(m.payload);
    map_all(b.cycle1);
    map_all(b.cycle2);
    map_all(b.path);
  }
  for (auto& e : m.edges) {
    e.u = to_parent[e.u];
    e.v = to_parent[e.v];
  }
  return m;
}

std::vector<Edge> edges_within(std::span<const Edge> edges,
                               const std::vector<char>& keep) {
  std::vector<Edge> out;
  for (const auto& e : edges) {
    if (keep[e.u] && keep[e.v]) out.push_back(e);
  }
  return out;
}

template <typename OrderFn>
MinimalStructure minimalize_with(const EdgeColoredGraph& g, OrderFn&& order) {
  const std::size_t n = g.vertex_count();
  auto core = two_color_core(g);
  if (core.empty()) {
    throw Error(Errc::kEmptyCore, "graph has no subgraph of minimum color degree 2");
  }
  std::vector<Edge> current = edges_within(g.edges(), membership(core, n));

  for (;;) {
    bool shrunk = false;
    for (std::size_t idx : order(current.size())) {
      std::vector<Edge> candidate;
      candidate.reserve(current.size() - 1);
      for (std::size_t i = 0; i < current.size(); ++i) {
        if (i != idx) candidate.push_back(current[i]);
      }
      const EdgeColoredGraph h(n, candidate);
      auto sub_core = two_color_core(h);
      if (!sub_core.empty()) {
        current = edges_within(candidate, membership(sub_core, n));
        shrunk = true;
        break;
      }
    }
    if (!shrunk) break;
  }

  VertexSet used;
  for (const auto& e : current) {
    used.push_back(e.u);
    used.push_back(e.v);
  }
  auto sub = induced_subgraph(EdgeColoredGraph(n, current), used);
  return remap(classify_minimal(sub.graph), sub.to_parent);
}

}  // namespace

GBowtie canonical_bowtie(GBowtie b) {
  b.cycle1 = orient_cycle(std::move(b.cycle1));
  b.cycle2 = orient_cycle(std::move(b.cycle2));
  const auto min1 = *std::min_element(b.cycle1.begin(), b.cycle1.end());
  const auto min2 = *std::min_element(b.cycle2.begin(), b.cycle2.end());
  if (min2 < min1) {
    std::swap(b.cycle1, b.cycle2);
    std::reverse(b.path.begin(), b.path.end());
  }
  if (b.path.size() == 1) b.path.clear();
  return b;
}

MinimalStructure classify_minimal(const EdgeColoredGraph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  if (n < 3) classification_failure("fewer than three vertices");
  if (!is_connected(g)) classification_failure("graph is disconnected");
  if (min_color_degree(g) < 2) classification_failure("minimum color degree below 2");

  std::vector<Vertex> deg3, deg4;
  std::vector<char> branch(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    switch (g.degree(v)) {
      case 2: break;
      case 3: deg3.push_back(v); branch[v] = 1; break;
      case 4: deg4.push_back(v); branch[v] = 1; break;
      default:
        classification_failure("vertex " + std::to_string(v) + " has degree " +
                               std::to_string(g.degree(v)));
    }
  }

  MinimalStructure out;
  out.edges.assign(g.edges().begin(), g.edges().end());

  if (deg3.empty() && deg4.empty()) {
    std::vector<Vertex> cycle{0};
    Vertex prev = 0;
    Vertex cur = std::min(g.neighbors(0)[0].vertex, g.neighbors(0)[1].vertex);
    while (cur != 0) {
      cycle.push_back(cur);
      auto nbrs = g.neighbors(cur);
      const Vertex next = nbrs[0].vertex == prev ? nbrs[1].vertex : nbrs[0].vertex;
      prev = cur;
      cur = next;
    }
    PCCycle c{cycle, cycle_colors(g, cycle)};
    if (!is_pc_cycle(g, c)) classification_failure("cycle is not properly colored");
    out.kind = StructureKind::kPCCycle;
    out.payload = std::move(c);
    return out;
  }

  GBowtie b;
  if (deg4.size() == 1 && deg3.empty()) {
    const Vertex z = deg4[0];
    std::vector<std::vector<Vertex>> loops;
    std::vector<char> consumed(n, 0);
    for (const auto& nb : g.neighbors(z)) {
      if (consumed[nb.vertex]) continue;
      auto seq = trace_branch(g, z, nb.vertex, branch);
      if (seq.back() != z || seq.size() < 4) classification_failure("degree-4 vertex without two loops");
      consumed[seq[1]] = 1;
      consumed[seq[seq.size() - 2]] = 1;
      seq.pop_back();
      loops.push_back(std::move(seq));
    }
    if (loops.size() != 2) classification_failure("expected two loops at the shared vertex");
    b = GBowtie{loops[0], loops[1], {}};
  } else if (deg3.size() == 2 && deg4.empty()) {
    std::vector<std::vector<Vertex>> loops;
    std::vector<Vertex> path;
    for (Vertex x : deg3) {
      std::vector<char> consumed(n, 0);
      for (const auto& nb : g.neighbors(x)) {
        if (consumed[nb.vertex]) continue;
        auto seq = trace_branch(g, x, nb.vertex, branch);
        consumed[seq[1]] = 1;
        consumed[seq[seq.size() - 2]] = 1;
        if (seq.back() == x) {
          if (seq.size() < 4) classification_failure("degenerate loop");
          seq.pop_back();
          loops.push_back(std::move(seq));
        } else if (x == deg3[0]) {
          if (!path.empty()) classification_failure("two paths between branch vertices");
          path = std::move(seq);
        }
      }
    }
    if (loops.size() != 2 || path.empty()) classification_failure("not a cycle-path-cycle shape");
    if (loops[0][0] != path.front()) std::swap(loops[0], loops[1]);
    b = GBowtie{loops[0], loops[1], path};
  } else {
    classification_failure("branch vertices do not form a g-bowtie");
  }

  if (has_pc_cycle(g)) classification_failure("g-bowtie contains a PC cycle");
  out.kind = StructureKind::kGBowtie;
  out.payload = canonical_bowtie(std::move(b));
  return out;
}

MinimalStructure minimalize_two_colored(const EdgeColoredGraph& g) {
  return minimalize_with(g, [](std::size_t m) {
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    return order;
  });
}

MinimalStructure minimalize_two_colored(const EdgeColoredGraph& g,
                                        std::uint64_t seed) {
  Rng rng(seed, 0x6d696e);
  return minimalize_with(g, [&rng](std::size_t m) {
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    rng.shuffle(order);
    return order;
  });
}

bool is_minimally_two_colored(const EdgeColoredGraph& g) {
  if (g.vertex_count() == 0 || min_color_degree(g) < 2) return false;
  const auto edges = g.edges();
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i != skip) rest.push_back(edges[i]);
    }
    if (!two_color_core(EdgeColoredGraph(g.vertex_count(), std::move(rest))).empty()) {
      return false;
    }
  }
  return true;
}

// --- g-bowtie construction from a Yeo vertex ----------------------------------

namespace {

// Longest properly colored path starting at z inside `allowed`; ties go to
// the first path found in neighbor order.
std::vector<Vertex> longest_pc_path(const EdgeColoredGraph& g, Vertex z,
                                    const std::vector<char>& allowed) {
  std::vector<Vertex> best{z};
  std::vector<Vertex> path{z};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[z] = 1;
  std::function<void(Vertex, std::optional<Color>)> grow =
      [&](Vertex v, std::optional<Color> in) {
        if (path.size() > best.size()) best = path;
        for (const auto& nb : g.neighbors(v)) {
          if (!allowed[nb.vertex] || on_path[nb.vertex]) continue;
          if (in && nb.color == *in) continue;
          on_path[nb.vertex] = 1;
          path.push_back(nb.vertex);
          grow(nb.vertex, nb.color);
          path.pop_back();
          on_path[nb.vertex] = 0;
        }
      };
  grow(z, std::nullopt);
  return best;
}

// Closes the longest path x_0..x_p into a cycle at the first x_i whose chord
// to x_p has a color different from the last path edge. Returns i.
std::size_t closing_index(const EdgeColoredGraph& g, const std::vector<Vertex>& x) {
  const std::size_t p = x.size() - 1;
  if (p < 2) {
    throw Error(Errc::kInvariantViolation, "longest PC path from the Yeo vertex is too short");
  }
  const Color last = *g.edge_color(x[p - 1], x[p]);
  for (std::size_t i = 0; i + 2 <= p; ++i) {
    auto c = g.edge_color(x[p], x[i]);
    if (c && *c != last) return i;
  }
  throw Error(Errc::kInvariantViolation, "no closing chord at the end of a longest PC path");
}

}  // namespace

GBowtie extract_structure_via_yeo(const EdgeColoredGraph& g) {
  if (!is_minimally_two_colored(g)) {
    throw Error(Errc::kPreconditionViolated, "graph is not minimally 2-colored");
  }
  if (has_pc_cycle(g)) {
    throw Error(Errc::kPreconditionViolated, "graph contains a PC cycle");
  }
  const auto n = static_cast<Vertex>(g.vertex_count());

  // Yeo vertex whose removal leaves exactly two sides, each joined by its own color.
  std::optional<Vertex> hub;
  std::vector<int> side(n, -1);
  for (Vertex z = 0; z < n && !hub; ++z) {
    std::fill(side.begin(), side.end(), -1);
    std::vector<Color> side_color;
    bool ok = true;
    for (const auto& start : g.neighbors(z)) {
      if (side[start.vertex] >= 0) {
        if (side_color[side[start.vertex]] != start.color) ok = false;
        continue;
      }
      const int id = static_cast<int>(side_color.size());
      side_color.push_back(start.color);
      std::vector<Vertex> stack{start.vertex};
      side[start.vertex] = id;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (const auto& nb : g.neighbors(v)) {
          if (nb.vertex != z && side[nb.vertex] < 0) {
            side[nb.vertex] = id;
            stack.push_back(nb.vertex);
          }
        }
      }
    }
    if (ok && side_color.size() == 2 && side_color[0] != side_color[1]) hub = z;
  }
  if (!hub) {
    throw Error(Errc::kInvariantViolation, "no Yeo vertex separating two sides");
  }
  const Vertex z = *hub;

  auto side_path = [&](int id) {
    std::vector<char> allowed(n, 0);
    for (Vertex v = 0; v < n; ++v) allowed[v] = (v == z || side[v] == id) ? 1 : 0;
    return longest_pc_path(g, z, allowed);
  };
  const auto xs = side_path(0);
  const auto ys = side_path(1);
  const std::size_t i = closing_index(g, xs);
  const std::size_t j = closing_index(g, ys);

  GBowtie b;
  b.cycle1.assign(xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
  b.cycle2.assign(ys.begin() + static_cast<std::ptrdiff_t>(j), ys.end());
  for (std::size_t t = i + 1; t-- > 0;) b.path.push_back(xs[t]);
  for (std::size_t t = 1; t <= j; ++t) b.path.push_back(ys[t]);
  b = canonical_bowtie(std::move(b));

  // The construction must recover the whole graph.
  std::vector<Edge> built;
  auto add_cycle = [&](const std::vector<Vertex>& c) {
    for (std::size_t t = 0; t < c.size(); ++t) {
      Vertex u = c[t], v = c[(t + 1) % c.size()];
      built.push_back({std::min(u, v), std::max(u, v), *g.edge_color(u, v)});
    }
  };
  add_cycle(b.cycle1);
  add_cycle(b.cycle2);
  for (std::size_t t = 0; t + 1 < b.path.size(); ++t) {
    Vertex u = b.path[t], v = b.path[t + 1];
    built.push_back({std::min(u, v), std::max(u, v), *g.edge_color(u, v)});
  }
  std::sort(built.begin(), built.end());
  if (!std::equal(built.begin(), built.end(), g.edges().begin(), g.edges().end())) {
    throw Error(Errc::kInvariantViolation, "constructed g-bowtie differs from the graph");
  }
  return b;
}

// --- complete bipartite ------------------------------------------------------

bool is_complete_bipartite(const EdgeColoredGraph& g, std::span<const Vertex> x,
                           std::span<const Vertex> y) {
  const std::size_t n = g.vertex_count();
  for (Vertex v : x) if (v >= n) return false;
  for (Vertex v : y) if (v >= n) return false;
  VertexSet xs(x.begin(), x.end()), ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
      std::adjacent_find(ys.begin(), ys.end()) != ys.end()) {
    return false;
  }
  if (xs.empty() || ys.empty() || xs.size() + ys.size() != n) return false;
  auto in_x = membership(xs, n);
  for (Vertex v : ys) if (in_x[v]) return false;
  if (g.edge_count() != xs.size() * ys.size()) return false;
  for (const auto& e : g.edges()) {
    if (in_x[e.u] == in_x[e.v]) return false;
  }
  return true;
}

std::optional<PCCycle> find_pc_c4_bipartite(const EdgeColoredGraph& g,
                                            std::span<const Vertex> x,
                                            std::span<const Vertex> y) {
  if (!is_complete_bipartite(g, x, y)) {
    throw Error(Errc::kNotCompleteBipartite,
                "graph is not complete bipartite between the given sides");
  }
  VertexSet xs(x.begin(), x.end()), ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = a + 1; b < xs.size(); ++b) {
      for (std::size_t c = 0; c < ys.size(); ++c) {
        for (std::size_t d = c + 1; d < ys.size(); ++d) {
          const Vertex x1 = xs[a], x2 = xs[b], y1 = ys[c], y2 = ys[d];
          const Color c0 = *g.edge_color(x1, y1);
          const Color c1 = *g.edge_color(y1, x2);
          const Color c2 = *g.edge_color(x2, y2);
          const Color c3 = *g.edge_color(y2, x1);
          if (c0 != c1 && c1 != c2 && c2 != c3 && c3 != c0) {
            return PCCycle{{x1, y1, x2, y2}, {c0, c1, c2, c3}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// --- disjoint structures -----------------------------------------------------

namespace {

using Structures = std::vector<MinimalStructure>;

// Peels k structures one at a time; `minimalize` picks the structure found in
// the remaining graph.
template <typename Minimalize>
std::optional<Structures> greedy_structures(const EdgeColoredGraph& g, std::size_t k,
                                            Minimalize&& minimalize) {
  std::vector<char> remaining(g.vertex_count(), 1);
  Structures out;
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet left;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (remaining[v]) left.push_back(v);
    }
    auto sub = induced_subgraph(g, left);
    if (two_color_core(sub.graph).empty()) return std::nullopt;
    auto m = remap(minimalize(sub.graph, i), sub.to_parent);
    for (Vertex v : m.vertices()) remaining[v] = 0;
    out.push_back(std::move(m));
  }
  return out;
}

// Exhaustive search for k disjoint vertex sets each inducing minimum color
// degree >= 2. Vertices outside the 2-color core can never take part.
class DisjointSetSearch {
 public:
  DisjointSetSearch(const EdgeColoredGraph& g, std::size_t k, Budget& budget)
      : g_(g), k_(k), budget_(budget), part_(g.vertex_count(), kOutside) {
    candidates_ = two_color_core(g);
    for (Vertex v : candidates_) part_[v] = kUndecided;
  }

  /// Nonempty parts on success; nullopt when absent or out of budget.
  std::optional<std::vector<VertexSet>> run() {
    sizes_.clear();
    if (search(0)) {
      std::vector<VertexSet> parts(k_);
      for (Vertex v : candidates_) {
        if (part_[v] >= 0) parts[static_cast<std::size_t>(part_[v])].push_back(v);
      }
      return parts;
    }
    return std::nullopt;
  }

  bool out_of_budget() const noexcept { return out_of_budget_; }

 private:
  static constexpr int kOutside = -2;
  static constexpr int kUndecided = -1;
  static constexpr int kUnused = -3;

  // Colors v sees toward vertices that are in its part or still undecided.
  std::size_t reachable_colors(Vertex v) const {
    ColorSet cs;
    for (const auto& nb : g_.neighbors(v)) {
      const int p = part_[nb.vertex];
      if (p == part_[v] || p == kUndecided) cs.push_back(nb.color);
    }
    std::sort(cs.begin(), cs.end());
    return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
  }

  bool feasible(std::size_t next) const {
    for (std::size_t i = 0; i < next; ++i) {
      const Vertex v = candidates_[i];
      if (part_[v] >= 0 && reachable_colors(v) < 2) return false;
    }
    std::size_t need = (k_ - sizes_.size()) * 3;
    for (std::size_t s : sizes_) need += s < 3 ? 3 - s : 0;
    return need <= candidates_.size() - next;
  }

  bool search(std::size_t next) {
    if (!budget_.spend()) {
      out_of_budget_ = true;
      return false;
    }
    if (!feasible(next)) return false;
    if (next == candidates_.size()) return sizes_.size() == k_;
    const Vertex v = candidates_[next];
    const std::size_t open = std::min(sizes_.size() + 1, k_);
    for (std::size_t p = 0; p < open; ++p) {
      const bool fresh = p == sizes_.size();
      if (fresh) sizes_.push_back(0);
      ++sizes_[p];
      part_[v] = static_cast<int>(p);
      if (search(next + 1)) return true;
      --sizes_[p];
      if (fresh) sizes_.pop_back();
      if (out_of_budget_) return false;
    }
    part_[v] = kUnused;
    if (search(next + 1)) return true;
    part_[v] = kUndecided;
    return false;
  }

  const EdgeColoredGraph& g_;
  std::size_t k_;
  Budget& budget_;
  std::vector<int> part_;
  VertexSet candidates_;
  std::vector<std::size_t> sizes_;
  bool out_of_budget_ = false;
};

}  // namespace

SearchResult<Structures> find_k_disjoint_structures(const EdgeColoredGraph& g,
                                                    std::size_t k,
                                                    DisjointStructureOptions opts) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be at least 1");
  Budget budget(opts.budget);

  budget.spend();
  if (auto found = greedy_structures(g, k, [](const EdgeColoredGraph& h, std::size_t) {
        return minimalize_two_colored(h);
      })) {
    return SearchResult<Structures>::found(std::move(*found), budget.used());
  }

  for (std::size_t r = 0; r < opts.restarts; ++r) {
    if (!budget.spend()) return SearchResult<Structures>::exhausted(budget.used());
    const std::uint64_t base = Rng(opts.seed, r).next();
    if (auto found = greedy_structures(g, k, [&](const EdgeColoredGraph& h, std::size_t i) {
          return minimalize_two_colored(h, base + i);
        })) {
      return SearchResult<Structures>::found(std::move(*found), budget.used());
    }
  }

  DisjointSetSearch search(g, k, budget);
  auto parts = search.run();
  if (!parts) {
    return search.out_of_budget() ? SearchResult<Structures>::exhausted(budget.used())
                                  : SearchResult<Structures>::absent(budget.used());
  }
  Structures out;
  for (const auto& part : *parts) {
    auto sub = induced_subgraph(g, part);
    out.push_back(remap(minimalize_two_colored(sub.graph), sub.to_parent));
  }
  return SearchResult<Structures>::found(std::move(out), budget.used());
}

}  // namespace ecpart
