#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ecpart/core.hpp"
#include "ecpart/rng.hpp"

namespace ecpart {

/// K_n with every edge a distinct color; colors follow lexicographic edge order.
EdgeColoredGraph rainbow_complete(std::size_t n);

/// Cycle 0-1-...-(n-1)-0, alternating colors 1,2 with a final 3 when n is odd.
EdgeColoredGraph pc_cycle_graph(std::size_t n);

/// g-bowtie without PC cycles in which every vertex sees exactly two colors:
/// cycles of lengths p and q joined by a path of `ell` edges (ell = 0 shares
/// one vertex). Cycle 1 is 0..p-1 attached at 0. Colors alternate 1/2
/// everywhere except at each attachment vertex, where both cycle edges share
/// a color. An even cycle cannot close that way with two colors, so its
/// second-to-last edge gets color 3.
EdgeColoredGraph g_bowtie_graph(std::size_t p, std::size_t q, std::size_t ell);

/// Each pair an edge with probability `edge_prob`, colored uniformly from
/// [0, color_count).
EdgeColoredGraph random_ecg(std::size_t n, double edge_prob, std::size_t color_count,
                            std::uint64_t seed);

struct MinColorDegreeOptions {
  double edge_prob = 0.5;
  std::size_t max_attempts = 100000;
};

/// Starts from random_ecg and repairs every vertex below `delta_c` by adding
/// an edge in a fresh color to a random non-neighbor, or, when the vertex is
/// adjacent to everything, recoloring one of its repeated-color edges with a
/// fresh color. Neither step lowers any color degree.
EdgeColoredGraph random_ecg_min_cdeg(std::size_t n, std::size_t delta_c,
                                     std::size_t color_count, std::uint64_t seed,
                                     MinColorDegreeOptions opts = {});

/// Colors K_size internally; receives the part size and a random stream.
using InternalColoring = std::function<EdgeColoredGraph(std::size_t, Rng&)>;

InternalColoring rainbow_internal(Color first_color);
InternalColoring monochromatic_internal(Color color);
/// Uniform random colors from [first_color, first_color + count).
InternalColoring random_internal(Color first_color, std::size_t count);

/// Complete graph made of parts colored by `internal`, with every pair of
/// parts joined in one color drawn from `crossing_colors` (at most two).
/// Throws kPaletteCollision when an internal color is also a crossing color,
/// and kRainbowTrianglePresent when `rainbow_triangle_free` is requested but
/// some part contains a rainbow triangle.
EdgeColoredGraph gallai_blowup(std::span<const std::size_t> part_sizes,
                               const InternalColoring& internal,
                               std::span<const Color> crossing_colors, std::uint64_t seed,
                               bool rainbow_triangle_free = false);

/// Complete bipartite K_{m,n} on X = 0..m-1, Y = m..m+n-1 with random colors,
/// repaired by fresh-color recoloring until δ^c >= min_cdeg.
EdgeColoredGraph random_complete_bipartite(std::size_t m, std::size_t n,
                                           std::size_t color_count, std::size_t min_cdeg,
                                           std::uint64_t seed);

/// Orients each pair independently with probability `arc_prob`, then repairs
/// deficient vertices (new arc to a non-neighbor, else reversal of a directed
/// path from a vertex with spare out-degree) until δ^+ >= min_outdeg.
/// Throws kUnsatisfiable when 2·min_outdeg + 1 > n.
Digraph random_oriented(std::size_t n, std::size_t min_outdeg, std::uint64_t seed,
                        double arc_prob = 0.5);

Digraph random_tournament(std::size_t n, std::uint64_t seed);

/// i -> i+1, ..., i+m (mod n) for odd n = 2m + 1; δ^+ = m.
Digraph rotational_tournament(std::size_t n);

}  // namespace ecpart
