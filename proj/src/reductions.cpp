#include "ecpart/reductions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "ecpart/errors.hpp"

namespace ecpart {

EdgeColoredGraph digraph_to_ecg(const Digraph& d) {
  if (!d.has_no_digons()) {
    throw Error(Errc::kNotOriented,
                "a pair of opposite arcs would need two colors on one edge");
  }
  std::vector<Edge> edges;
  edges.reserve(d.arc_count());
  for (const auto& [u, v] : d.arcs()) edges.push_back({u, v, v});
  return EdgeColoredGraph(d.vertex_count(), std::move(edges));
}

EdgeColoredGraph ecg_to_complete(const EdgeColoredGraph& g) {
  const auto colors = g.colors();
  const Color fresh = colors.empty() ? 0 : colors.back() + 1;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v, fresh});
    }
  }
  return EdgeColoredGraph(g.vertex_count(), std::move(edges));
}

ProjectionReport project_partition_to_digraph(const Digraph& d,
                                              std::span<const VertexSet> parts,
                                              std::span<const int> targets) {
  const std::size_t n = d.vertex_count();
  if (parts.size() != targets.size()) {
    throw Error(Errc::kMalformedPartition, "one target per part is required");
  }
  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) {
      throw Error(Errc::kMalformedPartition, "part " + std::to_string(i) + " is empty");
    }
    for (Vertex v : parts[i]) {
      if (v >= n || part_of[v] >= 0) {
        throw Error(Errc::kMalformedPartition,
                    "vertex " + std::to_string(v) + " is out of range or repeated");
      }
      part_of[v] = static_cast<int>(i);
    }
  }
  if (std::count(part_of.begin(), part_of.end(), -1) != 0) {
    throw Error(Errc::kMalformedPartition, "parts do not cover every vertex");
  }

  const auto image = digraph_to_ecg(d);
  ProjectionReport report;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto mask = membership(parts[i], n);
    PartProjection p;
    p.target = targets[i];
    p.min_out_degree = SIZE_MAX;
    p.min_color_degree = SIZE_MAX;
    for (Vertex v : parts[i]) {
      std::size_t out = 0;
      for (Vertex w : d.out_neighbors(v)) out += mask[w] ? 1 : 0;
      p.min_out_degree = std::min(p.min_out_degree, out);
      p.min_color_degree = std::min(p.min_color_degree, color_degree_into(image, v, mask));
    }
    p.premise = p.min_color_degree >= static_cast<std::size_t>(std::max(p.target, 0));
    p.conclusion = static_cast<long long>(p.min_out_degree) >= p.target - 1;
    report.holds = report.holds && (!p.premise || p.conclusion);
    report.parts.push_back(p);
  }
  return report;
}

bool is_dicycle_set(const Digraph& d, const DicycleSet& set) {
  std::vector<char> used(d.vertex_count(), 0);
  for (const auto& c : set.cycles) {
    if (c.size() < 2) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= d.vertex_count() || used[c[i]]) return false;
      used[c[i]] = 1;
      if (!d.has_arc(c[i], c[(i + 1) % c.size()])) return false;
    }
  }
  return true;
}

namespace {

using Mask = std::vector<char>;

// BFS distances from every vertex to `target` inside `alive`.
std::vector<std::size_t> distances_to(const Digraph& d, Vertex target, const Mask& alive) {
  std::vector<std::size_t> dist(d.vertex_count(), SIZE_MAX);
  std::deque<Vertex> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : d.in_neighbors(v)) {
      if (alive[u] && dist[u] == SIZE_MAX) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

class DicycleSearch {
 public:
  DicycleSearch(const Digraph& d, Budget& budget) : d_(d), budget_(budget) {}

  bool out_of_budget() const noexcept { return out_of_budget_; }

  // Greedy removal of shortest cycles, backtracking over every shortest
  // cycle at each level.
  bool shortest_first(Mask& alive, std::size_t k, DicycleSet& out) {
    if (k == 0) return true;
    if (!charge()) return false;
    auto cycles = shortest_cycles(alive);
    for (auto& c : cycles) {
      for (Vertex v : c) alive[v] = 0;
      out.cycles.push_back(c);
      if (shortest_first(alive, k - 1, out)) return true;
      out.cycles.pop_back();
      for (Vertex v : c) alive[v] = 1;
      if (out_of_budget_) return false;
    }
    return false;
  }

  // Complete search: the lowest live vertex is either unused or lies on
  // some cycle of the remaining graph.
  bool exhaustive(Mask alive, std::size_t k, DicycleSet& out) {
    if (k == 0) return true;
    if (!charge()) return false;
    prune_acyclic_vertices(alive);
    const auto live = static_cast<std::size_t>(std::count(alive.begin(), alive.end(), 1));
    const std::size_t min_len = d_.has_no_digons() ? 3 : 2;
    if (live < k * min_len) return false;
    Vertex v = 0;
    while (!alive[v]) ++v;

    bool found = false;
    cycles_through(v, alive, SIZE_MAX, [&](const std::vector<Vertex>& c) {
      Mask rest = alive;
      for (Vertex w : c) rest[w] = 0;
      out.cycles.push_back(c);
      if (exhaustive(std::move(rest), k - 1, out)) {
        found = true;
        return true;
      }
      out.cycles.pop_back();
      return out_of_budget_;
    });
    if (found) return true;
    if (out_of_budget_) return false;
    alive[v] = 0;
    return exhaustive(std::move(alive), k, out);
  }

 private:
  bool charge() {
    if (!budget_.spend()) out_of_budget_ = true;
    return !out_of_budget_;
  }

  void prune_acyclic_vertices(Mask& alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < d_.vertex_count(); ++v) {
        if (!alive[v]) continue;
        auto live = [&](std::span<const Vertex> ws) {
          return std::any_of(ws.begin(), ws.end(), [&](Vertex w) { return alive[w] != 0; });
        };
        if (!live(d_.out_neighbors(v)) || !live(d_.in_neighbors(v))) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
  }

  // Enumerates simple cycles whose minimum vertex is `s`, of length at most
  // `max_len`. `visit` returns true to stop the enumeration.
  void cycles_through(Vertex s, const Mask& alive, std::size_t max_len,
                      const std::function<bool(const std::vector<Vertex>&)>& visit) {
    const auto back = distances_to(d_, s, alive);
    std::vector<Vertex> path{s};
    Mask on_path(d_.vertex_count(), 0);
    on_path[s] = 1;
    bool stop = false;
    std::function<void(Vertex)> grow = [&](Vertex v) {
      for (Vertex w : d_.out_neighbors(v)) {
        if (stop) return;
        if (!charge()) {
          stop = true;
          return;
        }
        if (w == s) {
          if (path.size() >= 2 && path.size() <= max_len && visit(path)) stop = true;
          continue;
        }
        if (w < s || !alive[w] || on_path[w] || back[w] == SIZE_MAX) continue;
        if (path.size() + back[w] > max_len) continue;
        on_path[w] = 1;
        path.push_back(w);
        grow(w);
        path.pop_back();
        on_path[w] = 0;
      }
    };
    grow(s);
  }

  std::vector<std::vector<Vertex>> shortest_cycles(const Mask& alive) {
    std::size_t girth = SIZE_MAX;
    for (Vertex s = 0; s < d_.vertex_count(); ++s) {
      if (!alive[s]) continue;
      const auto back = distances_to(d_, s, alive);
      for (Vertex w : d_.out_neighbors(s)) {
        if (alive[w] && back[w] != SIZE_MAX) girth = std::min(girth, back[w] + 1);
      }
    }
    std::vector<std::vector<Vertex>> out;
    if (girth == SIZE_MAX) return out;
    for (Vertex s = 0; s < d_.vertex_count() && !out_of_budget_; ++s) {
      if (!alive[s]) continue;
      cycles_through(s, alive, girth, [&](const std::vector<Vertex>& c) {
        if (c.size() == girth) out.push_back(c);
        return false;
      });
    }
    return out;
  }

  const Digraph& d_;
  Budget& budget_;
  bool out_of_budget_ = false;
};

}  // namespace

SearchResult<DicycleSet> find_k_disjoint_dicycles(const Digraph& d, std::size_t k,
                                                  std::uint64_t budget) {
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be at least 1");
  if (d.vertex_count() == 0) return SearchResult<DicycleSet>::absent();

  // The greedy phase gets half the budget so the exhaustive phase always runs.
  Budget greedy_budget(budget / 2);
  {
    DicycleSearch greedy(d, greedy_budget);
    Mask alive(d.vertex_count(), 1);
    DicycleSet out;
    if (greedy.shortest_first(alive, k, out)) {
      return SearchResult<DicycleSet>::found(std::move(out), greedy_budget.used());
    }
  }

  Budget rest(budget - std::min(budget, greedy_budget.used()));
  DicycleSearch search(d, rest);
  DicycleSet out;
  const bool ok = search.exhaustive(Mask(d.vertex_count(), 1), k, out);
  const std::uint64_t steps = greedy_budget.used() + rest.used();
  if (ok) return SearchResult<DicycleSet>::found(std::move(out), steps);
  return search.out_of_budget() ? SearchResult<DicycleSet>::exhausted(steps)
                                : SearchResult<DicycleSet>::absent(steps);
}

long long bound_chain(long long t, long long k) {
  if (t < 1 || k < 2) throw Error(Errc::kInvalidArgument, "bound_chain needs t >= 1, k >= 2");
  return t * k - t + 2;
}

}  // namespace ecpart
