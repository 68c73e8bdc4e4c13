#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecpart/core.hpp"
#include "ecpart/dyadic.hpp"
#include "ecpart/search.hpp"

namespace ecpart {

/// A vertex partition together with the targets it meets. `witnesses[v]` is
/// the color set v sees inside its own part.
struct PartitionCertificate {
  std::vector<VertexSet> parts;
  PartitionTargets targets{std::vector<int>{1}};
  std::vector<ColorSet> witnesses;
};

struct Deficiency {
  Vertex vertex = 0;
  std::size_t part = 0;
  std::size_t color_degree = 0;
  int target = 0;
  int shortfall() const noexcept { return target - static_cast<int>(color_degree); }
};

struct PartitionCheck {
  std::optional<PartitionCertificate> certificate;
  std::vector<Deficiency> deficiencies;

  bool ok() const noexcept { return certificate.has_value(); }
};

/// Validates the shape of `parts` (disjoint, nonempty, covering, one per
/// target) and throws kMalformedPartition otherwise. Then reports either a
/// certificate or every vertex that misses its part's target.
PartitionCheck check_partition(const EdgeColoredGraph& g,
                               std::span<const VertexSet> parts,
                               const PartitionTargets& targets);

/// Grows disjoint seeds into a full feasible partition. Leftover vertices are
/// scanned by increasing id and placed into the first part where they reach
/// its target; when no single vertex fits anywhere, the whole leftover set
/// goes into the last part.
///
/// Requires δ^c(G) >= Σ(a_i - 1) + 1 and δ^c(G[seed_i]) >= a_i.
PartitionCertificate extend_feasible_tuple(const EdgeColoredGraph& g,
                                           std::span<const VertexSet> seeds,
                                           const PartitionTargets& targets);

/// Backtracking over vertex-to-part assignments, pruning a branch as soon as
/// an assigned vertex cannot reach its target using its part plus the
/// undecided vertices.
SearchResult<PartitionCertificate> exact_partition_search(
    const EdgeColoredGraph& g, const PartitionTargets& targets,
    std::uint64_t budget = kDefaultBudget);

enum class PipelineRoute { kStructures, kExact };

struct PipelineResult {
  SearchResult<PartitionCertificate> result;
  PipelineRoute route = PipelineRoute::kExact;
};

/// 2^k-feasible partition: k disjoint minimal structures extended greedily,
/// falling back to exact search when that fails.
PipelineResult partition_2k_pipeline(const EdgeColoredGraph& g, std::size_t k,
                                     std::uint64_t budget = kDefaultBudget,
                                     std::uint64_t seed = 0);

/// Splits V into (A, B) by independent fair coin flips, one stream per trial,
/// and returns the first split meeting targets (a, b). `steps` in the result
/// is the number of trials used.
SearchResult<PartitionCertificate> random_partition(const EdgeColoredGraph& g,
                                                    const PartitionTargets& targets,
                                                    std::uint64_t seed,
                                                    std::size_t max_tries);

/// Smallest δ^c for which the randomized split is guaranteed to succeed with
/// positive probability: ⌈2 ln n + 4(a - 1)⌉.
std::size_t random_partition_threshold(std::size_t n, int a);

// --- probability kernel --------------------------------------------------------

/// (x0; x1..xk) with k >= 1, every x_i >= 1 and 0 <= x0 <= k/2.
struct GoodVector {
  std::size_t x0 = 0;
  std::vector<std::size_t> xs;

  bool is_good() const noexcept;
};

/// Distribution of the number of colors present in S when each of the x_i
/// vertices of color i lands in S with probability 1/2. Entry j is
/// P(exactly j colors present).
std::vector<Dyadic> presence_count_distribution(std::span<const std::size_t> xs);

/// P(at most x0 colors present); no restriction on x0.
Dyadic presence_lower_tail(std::span<const std::size_t> xs, std::size_t x0);

/// P_S for a good vector. Throws kNotGood otherwise.
Dyadic p_s_exact(const GoodVector& x);

/// Σ_{j=0}^{x0} C(k, j) / 2^k. Throws kNotGood when x0 > k/2.
Dyadic p_s_bound(std::size_t x0, std::size_t k);

/// g(1) = 2, g(k) = max(f(k) + 1, g(k-1) + 3). `f` must define 2..k.
int g_threshold(int k, const std::map<int, int>& f);

// --- complete and bipartite hosts ----------------------------------------------

struct GallaiPartition {
  std::vector<VertexSet> parts;
  ColorSet crossing_colors;
};

/// Validity check: >= 2 nonempty covering parts, one color between each pair
/// of parts, at most two crossing colors overall.
bool is_gallai_partition(const EdgeColoredGraph& k, std::span<const VertexSet> parts);

/// Gallai partition of a rainbow-triangle-free complete graph. With at most
/// two colors in total this is the all-singleton partition. Otherwise the
/// fewest parts are used: two-part splits come from a single color whose
/// removal disconnects the graph, larger ones from an exhaustive search over
/// set partitions.
GallaiPartition gallai_partition(const EdgeColoredGraph& k);

enum class CompleteRoute { kRainbowTriangle, kGallai };

struct CompleteA2Result {
  PartitionCertificate certificate;
  CompleteRoute route = CompleteRoute::kRainbowTriangle;
};

/// (a, 2)-feasible partition of a complete graph with δ^c >= a + 3.
CompleteA2Result partition_complete_a2(const EdgeColoredGraph& k, int a);

/// (a, 2)-feasible partition of a complete bipartite graph with δ^c >= a + 2:
/// the 2-part is a properly colored 4-cycle.
PartitionCertificate partition_bipartite_a2(const EdgeColoredGraph& g,
                                            std::span<const Vertex> x,
                                            std::span<const Vertex> y, int a);

}  // namespace ecpart
