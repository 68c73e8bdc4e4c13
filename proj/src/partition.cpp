#include "ecpart/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecpart/errors.hpp"
#include "ecpart/rng.hpp"
#include "ecpart/structures.hpp"

namespace ecpart {

namespace {

void require_two_vertices(const EdgeColoredGraph& g) {
  if (g.vertex_count() < 2) {
    throw Error(Errc::kPreconditionViolated,
                "a partition needs at least two vertices");
  }
}

std::string describe(Vertex v) { return "vertex " + std::to_string(v); }

}  // namespace

PartitionCheck check_partition(const EdgeColoredGraph& g,
                               std::span<const VertexSet> parts,
                               const PartitionTargets& targets) {
  require_two_vertices(g);
  const std::size_t n = g.vertex_count();
  if (parts.size() != targets.size()) {
    throw Error(Errc::kMalformedPartition,
                std::to_string(parts.size()) + " parts for " +
                    std::to_string(targets.size()) + " targets");
  }
  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) {
      throw Error(Errc::kMalformedPartition, "part " + std::to_string(i) + " is empty");
    }
    for (Vertex v : parts[i]) {
      if (v >= n) {
        throw Error(Errc::kMalformedPartition, describe(v) + " is out of range");
      }
      if (part_of[v] >= 0) {
        throw Error(Errc::kMalformedPartition, describe(v) + " appears twice");
      }
      part_of[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] < 0) {
      throw Error(Errc::kMalformedPartition, describe(v) + " is in no part");
    }
  }

  PartitionCheck out;
  PartitionCertificate cert{{}, targets, std::vector<ColorSet>(n)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    VertexSet sorted = parts[i];
    std::sort(sorted.begin(), sorted.end());
    cert.parts.push_back(std::move(sorted));
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto p = static_cast<std::size_t>(part_of[v]);
    ColorSet seen;
    for (const auto& nb : g.neighbors(v)) {
      if (part_of[nb.vertex] == part_of[v]) seen.push_back(nb.color);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (static_cast<int>(seen.size()) < targets[p]) {
      out.deficiencies.push_back({v, p, seen.size(), targets[p]});
    }
    cert.witnesses[v] = std::move(seen);
  }
  if (out.deficiencies.empty()) out.certificate = std::move(cert);
  return out;
}

namespace {

PartitionCertificate certify(const EdgeColoredGraph& g, std::span<const VertexSet> parts,
                             const PartitionTargets& targets, const char* who) {
  auto check = check_partition(g, parts, targets);
  if (!check.ok()) {
    const auto& d = check.deficiencies.front();
    throw Error(Errc::kCertificateCheckFailure,
                std::string(who) + " produced a partition where " + describe(d.vertex) +
                    " sees " + std::to_string(d.color_degree) + " colors, target " +
                    std::to_string(d.target));
  }
  return std::move(*check.certificate);
}

}  // namespace

PartitionCertificate extend_feasible_tuple(const EdgeColoredGraph& g,
                                           std::span<const VertexSet> seeds,
                                           const PartitionTargets& targets) {
  require_two_vertices(g);
  const std::size_t n = g.vertex_count();
  const std::size_t k = targets.size();
  if (seeds.size() != k) {
    throw Error(Errc::kPreconditionViolated, "one seed per target is required");
  }
  const auto threshold = static_cast<std::size_t>(targets.extension_threshold());
  if (min_color_degree(g) < threshold) {
    throw Error(Errc::kPreconditionViolated,
                "minimum color degree " + std::to_string(min_color_degree(g)) +
                    " is below " + std::to_string(threshold));
  }

  std::vector<std::vector<char>> in_part(k, std::vector<char>(n, 0));
  std::vector<char> assigned(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (seeds[i].empty()) {
      throw Error(Errc::kPreconditionViolated, "seed " + std::to_string(i) + " is empty");
    }
    for (Vertex v : seeds[i]) {
      if (v >= n || assigned[v]) {
        throw Error(Errc::kPreconditionViolated,
                    "seeds are not disjoint sets of valid vertices");
      }
      assigned[v] = 1;
      in_part[i][v] = 1;
    }
    for (Vertex v : seeds[i]) {
      if (color_degree_into(g, v, in_part[i]) < static_cast<std::size_t>(targets[i])) {
        throw Error(Errc::kPreconditionViolated,
                    "seed " + std::to_string(i) + " does not meet its target at " +
                        describe(v));
      }
    }
  }

  VertexSet leftover;
  for (Vertex v = 0; v < n; ++v) {
    if (!assigned[v]) leftover.push_back(v);
  }

  while (!leftover.empty()) {
    bool moved = false;
    for (std::size_t idx = 0; idx < leftover.size() && !moved; ++idx) {
      const Vertex x = leftover[idx];
      for (std::size_t i = 0; i < k; ++i) {
        if (color_degree_into(g, x, in_part[i]) >= static_cast<std::size_t>(targets[i])) {
          in_part[i][x] = 1;
          leftover.erase(leftover.begin() + static_cast<std::ptrdiff_t>(idx));
          moved = true;
          break;
        }
      }
    }
    if (moved) continue;

    // No single vertex fits. Then every leftover vertex reaches the last
    // target inside A_k ∪ S: one that did not would see at least
    // Σ_{i<k}(a_i - 1) + 1 colors toward A_1..A_{k-1}, so some A_i would
    // have taken it above.
    auto& last = in_part[k - 1];
    std::vector<char> merged = last;
    for (Vertex v : leftover) merged[v] = 1;
    for (Vertex v : leftover) {
      if (color_degree_into(g, v, merged) < static_cast<std::size_t>(targets[k - 1])) {
        throw Error(Errc::kStuckInvariantViolation,
                    "no part can absorb " + describe(v));
      }
    }
    last = std::move(merged);
    leftover.clear();
  }

  std::vector<VertexSet> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      if (in_part[i][v]) parts[i].push_back(v);
    }
  }
  return certify(g, parts, targets, "extend_feasible_tuple");
}

// --- exact search ------------------------------------------------------------

namespace {

class ExactPartitionSearch {
 public:
  ExactPartitionSearch(const EdgeColoredGraph& g, const PartitionTargets& targets,
                       Budget& budget)
      : g_(g),
        targets_(targets),
        budget_(budget),
        part_(g.vertex_count(), kUndecided),
        sizes_(targets.size(), 0) {}

  bool run() { return search(0); }
  bool out_of_budget() const noexcept { return out_of_budget_; }

  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out(targets_.size());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      out[static_cast<std::size_t>(part_[v])].push_back(v);
    }
    return out;
  }

 private:
  static constexpr int kUndecided = -1;

  bool can_reach_target(Vertex v) const {
    const int p = part_[v];
    ColorSet cs;
    for (const auto& nb : g_.neighbors(v)) {
      const int q = part_[nb.vertex];
      if (q == p || q == kUndecided) cs.push_back(nb.color);
    }
    std::sort(cs.begin(), cs.end());
    const auto distinct = std::unique(cs.begin(), cs.end()) - cs.begin();
    return distinct >= targets_[static_cast<std::size_t>(p)];
  }

  bool feasible(Vertex assigned_upto) const {
    for (Vertex u = 0; u <= assigned_upto; ++u) {
      if (!can_reach_target(u)) return false;
    }
    const auto empty = static_cast<std::size_t>(
        std::count(sizes_.begin(), sizes_.end(), std::size_t{0}));
    return empty <= g_.vertex_count() - assigned_upto - 1;
  }

  // Parts with equal targets are interchangeable: a part is only opened
  // after every earlier part with the same target is nonempty.
  bool symmetric_duplicate(std::size_t p) const {
    if (sizes_[p] != 0) return false;
    for (std::size_t q = 0; q < p; ++q) {
      if (targets_[q] == targets_[p] && sizes_[q] == 0) return true;
    }
    return false;
  }

  bool search(Vertex v) {
    if (v == g_.vertex_count()) return true;
    for (std::size_t p = 0; p < targets_.size(); ++p) {
      if (symmetric_duplicate(p)) continue;
      if (!budget_.spend()) {
        out_of_budget_ = true;
        return false;
      }
      part_[v] = static_cast<int>(p);
      ++sizes_[p];
      if (feasible(v) && search(v + 1)) return true;
      --sizes_[p];
      part_[v] = kUndecided;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  const PartitionTargets& targets_;
  Budget& budget_;
  std::vector<int> part_;
  std::vector<std::size_t> sizes_;
  bool out_of_budget_ = false;
};

}  // namespace

SearchResult<PartitionCertificate> exact_partition_search(const EdgeColoredGraph& g,
                                                          const PartitionTargets& targets,
                                                          std::uint64_t budget) {
  require_two_vertices(g);
  Budget spent(budget);
  ExactPartitionSearch search(g, targets, spent);
  if (search.run()) {
    auto parts = search.parts();
    return SearchResult<PartitionCertificate>::found(
        certify(g, parts, targets, "exact_partition_search"), spent.used());
  }
  return search.out_of_budget() ? SearchResult<PartitionCertificate>::exhausted(spent.used())
                                : SearchResult<PartitionCertificate>::absent(spent.used());
}

PipelineResult partition_2k_pipeline(const EdgeColoredGraph& g, std::size_t k,
                                     std::uint64_t budget, std::uint64_t seed) {
  require_two_vertices(g);
  if (k == 0) throw Error(Errc::kInvalidArgument, "k must be at least 1");
  const auto targets = PartitionTargets::uniform(k, 2);

  auto structures = find_k_disjoint_structures(g, k, {budget, seed, 32});
  if (structures.is_found() && min_color_degree(g) >= k + 1) {
    std::vector<VertexSet> seeds;
    for (const auto& m : *structures.value) seeds.push_back(m.vertices());
    auto cert = extend_feasible_tuple(g, seeds, targets);
    return {SearchResult<PartitionCertificate>::found(std::move(cert), structures.steps),
            PipelineRoute::kStructures};
  }
  return {exact_partition_search(g, targets, budget), PipelineRoute::kExact};
}

// --- randomized split --------------------------------------------------------

SearchResult<PartitionCertificate> random_partition(const EdgeColoredGraph& g,
                                                    const PartitionTargets& targets,
                                                    std::uint64_t seed,
                                                    std::size_t max_tries) {
  require_two_vertices(g);
  if (targets.size() != 2) {
    throw Error(Errc::kInvalidArgument, "random_partition handles two parts only");
  }
  if (targets[0] < targets[1]) {
    throw Error(Errc::kInvalidArgument, "targets must satisfy a >= b");
  }
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> parts(2);
  for (std::size_t trial = 0; trial < max_tries; ++trial) {
    Rng rng(seed, trial);
    parts[0].clear();
    parts[1].clear();
    for (Vertex v = 0; v < n; ++v) parts[rng.coin() ? 1 : 0].push_back(v);
    if (parts[0].empty() || parts[1].empty()) continue;
    auto check = check_partition(g, parts, targets);
    if (check.ok()) {
      return SearchResult<PartitionCertificate>::found(std::move(*check.certificate),
                                                       trial + 1);
    }
  }
  return SearchResult<PartitionCertificate>::exhausted(max_tries);
}

std::size_t random_partition_threshold(std::size_t n, int a) {
  const double bound = 2.0 * std::log(static_cast<double>(n)) + 4.0 * (a - 1);
  return static_cast<std::size_t>(std::ceil(bound));
}

}  // namespace ecpart
