#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ecpart/core.hpp"
#include "ecpart/search.hpp"

namespace ecpart {

/// Cycle whose consecutive edges (including the closing pair) differ in color.
/// `colors[i]` is the color of the edge vertices[i] -- vertices[i+1 mod L].
struct PCCycle {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;

  friend bool operator==(const PCCycle&, const PCCycle&) = default;
};

/// Two cycles joined by a path. Each cycle is listed starting at the vertex
/// where the path attaches. `path` runs from cycle1's attachment to cycle2's
/// attachment, both included; it is empty when the cycles share that vertex.
struct GBowtie {
  std::vector<Vertex> cycle1;
  std::vector<Vertex> cycle2;
  std::vector<Vertex> path;

  friend bool operator==(const GBowtie&, const GBowtie&) = default;
};

enum class StructureKind { kPCCycle, kGBowtie };

struct MinimalStructure {
  StructureKind kind = StructureKind::kPCCycle;
  std::variant<PCCycle, GBowtie> payload;
  /// Edges of the structure in host-graph ids, canonical order.
  std::vector<Edge> edges;

  VertexSet vertices() const;
  const PCCycle& cycle() const { return std::get<PCCycle>(payload); }
  const GBowtie& bowtie() const { return std::get<GBowtie>(payload); }
};

struct RainbowTriangle {
  std::array<Vertex, 3> vertices{};
  std::array<Color, 3> colors{};  // colors of v0v1, v1v2, v2v0
};

/// Lexicographically first triangle with three distinct edge colors.
std::optional<RainbowTriangle> find_rainbow_triangle(const EdgeColoredGraph& g);

/// Lowest non-isolated vertex z such that every component of G - z is joined
/// to z by edges of a single color.
std::optional<Vertex> find_yeo_vertex(const EdgeColoredGraph& g);

/// Decides whether G has a properly colored cycle by repeatedly deleting a
/// Yeo vertex. Graphs without PC cycles always have one, and a PC cycle never
/// passes through a Yeo vertex, so the first graph without a Yeo vertex
/// proves a PC cycle exists.
bool has_pc_cycle(const EdgeColoredGraph& g);

/// Witness search over (vertex, entry color) states with path backtracking.
/// Reports kAbsent immediately when `has_pc_cycle` is false.
SearchResult<PCCycle> find_pc_cycle(const EdgeColoredGraph& g,
                                    std::uint64_t budget = kDefaultBudget);

/// True when `c` is a cycle of `g` with the recorded colors and no two
/// consecutive edges share a color.
bool is_pc_cycle(const EdgeColoredGraph& g, const PCCycle& c);

/// Shrinks G to a minimally 2-colored subgraph by deleting edges in
/// lexicographic order and re-coring, then classifies the result.
/// Throws kEmptyCore when G has no 2-colored subgraph.
MinimalStructure minimalize_two_colored(const EdgeColoredGraph& g);

/// Same, but edges are tried in the order given by a seeded shuffle.
MinimalStructure minimalize_two_colored(const EdgeColoredGraph& g,
                                        std::uint64_t seed);

/// Classifies an already minimally 2-colored graph. Throws
/// kClassificationFailure when the graph is neither a PC cycle nor a
/// PC-cycle-free 2-colored g-bowtie. Here "2-colored" means every vertex sees
/// at least two colors; the bowtie may use more than two colors overall.
MinimalStructure classify_minimal(const EdgeColoredGraph& g);

/// True when δ^c(G) >= 2 and deleting any single edge empties the 2-color core.
bool is_minimally_two_colored(const EdgeColoredGraph& g);

/// Builds the g-bowtie of a minimally 2-colored, PC-cycle-free graph from
/// longest PC paths grown out of a Yeo vertex on each side.
GBowtie extract_structure_via_yeo(const EdgeColoredGraph& g);

/// Canonical form: cycles rotated to start at the attachment vertex and
/// oriented toward the smaller neighbor; cycle1 is the one with the smaller
/// minimum vertex.
GBowtie canonical_bowtie(GBowtie b);

/// First properly colored 4-cycle x1 y1 x2 y2 of a complete bipartite graph.
/// Throws kNotCompleteBipartite when (X, Y) does not describe G.
std::optional<PCCycle> find_pc_c4_bipartite(const EdgeColoredGraph& g,
                                            std::span<const Vertex> x,
                                            std::span<const Vertex> y);

bool is_complete_bipartite(const EdgeColoredGraph& g, std::span<const Vertex> x,
                           std::span<const Vertex> y);

struct DisjointStructureOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::size_t restarts = 32;
};

/// k pairwise vertex-disjoint minimal structures. Tries the greedy peel, then
/// seeded restarts, then an exhaustive assignment search that can prove
/// absence within the budget.
SearchResult<std::vector<MinimalStructure>> find_k_disjoint_structures(
    const EdgeColoredGraph& g, std::size_t k, DisjointStructureOptions opts = {});

}  // namespace ecpart
