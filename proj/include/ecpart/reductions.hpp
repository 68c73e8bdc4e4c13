#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecpart/core.hpp"
#include "ecpart/search.hpp"

namespace ecpart {

/// Pairwise vertex-disjoint directed cycles, each listed in arc order.
struct DicycleSet {
  std::vector<std::vector<Vertex>> cycles;
};

/// Edge-colored graph with an edge {u,v} per arc u->v, colored by its head v.
/// Throws kNotOriented when D has a pair of opposite arcs.
EdgeColoredGraph digraph_to_ecg(const Digraph& d);

/// Completion of G: missing pairs get the fresh color max(col(G)) + 1.
EdgeColoredGraph ecg_to_complete(const EdgeColoredGraph& g);

struct PartProjection {
  std::size_t min_out_degree = 0;
  std::size_t min_color_degree = 0;
  int target = 0;
  /// δ^c(G[V_i]) >= d_i in the head-colored image.
  bool premise = false;
  /// δ^+(D[V_i]) >= d_i - 1.
  bool conclusion = false;
};

struct ProjectionReport {
  std::vector<PartProjection> parts;
  /// premise implies conclusion on every part.
  bool holds = true;
};

/// Compares per-part out-degrees of D with color degrees of its head-colored
/// image on the same vertex partition.
ProjectionReport project_partition_to_digraph(const Digraph& d,
                                              std::span<const VertexSet> parts,
                                              std::span<const int> targets);

/// True when `set` is a family of disjoint directed cycles of d.
bool is_dicycle_set(const Digraph& d, const DicycleSet& set);

/// k vertex-disjoint directed cycles. Greedy shortest-cycle removal with
/// backtracking over the alternative shortest cycles, then an exhaustive
/// search (a vertex is either skipped or lies on some cycle through it) that
/// can prove absence within the budget.
SearchResult<DicycleSet> find_k_disjoint_dicycles(const Digraph& d, std::size_t k,
                                                  std::uint64_t budget = kDefaultBudget);

/// t·k - t + 2: the bound on g(2,...,2)_k implied by g(a,2) <= a + t.
long long bound_chain(long long t, long long k);

// --- experiment harness --------------------------------------------------------

/// One CSV row. `params` are the experiment-specific columns in order.
struct TrialRecord {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  SearchStatus outcome = SearchStatus::kAbsent;
  double elapsed_ms = 0.0;
};

struct DigraphCandidate {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  Digraph digraph;
};

struct EcgCandidate {
  std::size_t trial_index = 0;
  std::uint64_t seed = 0;
  EdgeColoredGraph graph;
};

struct BermondThomassenParams {
  std::size_t n = 7;
  std::size_t k = 2;
  /// Defaults to 2k - 1 when unset.
  std::optional<std::size_t> min_out_degree;
  double arc_prob = 0.5;
  bool tournament = false;
  std::uint64_t budget = kDefaultBudget;
};

struct BermondThomassenReport {
  std::vector<TrialRecord> trials;
  std::size_t successes = 0;
  /// Digraphs where k disjoint cycles were not found, kept for inspection.
  std::vector<DigraphCandidate> candidates;
};

/// Samples oriented graphs with δ^+ >= min_out_degree and searches each for
/// k disjoint directed cycles. Trial t uses the random stream (seed, t).
BermondThomassenReport bermond_thomassen_probe(const BermondThomassenParams& params,
                                               std::size_t samples, std::uint64_t seed);

enum class ConjectureMode { kAbFeasible, kTwoK };

struct ConjectureParams {
  ConjectureMode mode = ConjectureMode::kAbFeasible;
  std::size_t n = 8;
  std::size_t min_color_degree = 5;
  std::size_t colors = 8;
  double edge_prob = 0.5;
  bool complete = false;
  int a = 2;
  int b = 2;
  std::size_t k = 2;
  /// Threshold at or above which an absent instance is a counterexample
  /// candidate; defaults to a + b + 1 (ab mode) or g(k) with f(k) = 2k - 1.
  std::optional<std::size_t> conjectured_threshold;
  std::uint64_t budget = kDefaultBudget;
};

struct ConjectureReport {
  std::vector<TrialRecord> trials;
  std::size_t found = 0;
  std::size_t absent = 0;
  std::size_t exhausted = 0;
  std::vector<EcgCandidate> candidates;
};

ConjectureReport conjecture_probe(const ConjectureParams& params, std::size_t samples,
                                  std::uint64_t seed);

/// Runs one conjecture trial on a given graph (used for injected fixtures).
TrialRecord conjecture_trial(const ConjectureParams& params, const EdgeColoredGraph& g,
                             std::size_t trial_index, std::uint64_t seed);

/// Summary of the p_s check for one (k, x0): every nondecreasing x_1..x_k
/// with 1 <= x_i <= max_x is compared against the binomial bound.
struct PsBoundRow {
  std::size_t k = 0;
  std::size_t x0 = 0;
  std::size_t vectors = 0;
  std::string max_exact;
  std::string bound;
  bool holds = true;
  /// p_s at x = (1,...,1) equals the bound.
  bool tight_at_ones = false;
};

std::vector<PsBoundRow> ps_bound_table(std::size_t max_k, std::size_t max_x);

std::string ps_bound_csv(std::span<const PsBoundRow> rows);

/// Writes rows as CSV: trial_index,seed,n,<param columns>,outcome,elapsed_ms.
std::string trials_to_csv(std::span<const TrialRecord> trials);

}  // namespace ecpart
