#pragma once

#include <string>
#include <vector>

#include "ecpart/core.hpp"
#include "ecpart/io.hpp"

namespace fixture {

using ecpart::Edge;
using ecpart::EdgeColoredGraph;

inline std::string data(const std::string& name) {
  return std::string(ECPART_TEST_DATA) + "/" + name;
}

inline EdgeColoredGraph load(const std::string& name) {
  return ecpart::parse_ecg(ecpart::read_text_file(data(name)));
}

inline EdgeColoredGraph alternating_c4() {
  return EdgeColoredGraph(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}});
}

inline EdgeColoredGraph two_c4() {
  return EdgeColoredGraph(8, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2},
                              {4, 5, 1}, {5, 6, 2}, {6, 7, 1}, {4, 7, 2}});
}

// z = 0; triangles 0-1-2 and 0-3-4.
inline EdgeColoredGraph bowtie() {
  return EdgeColoredGraph(5, {{0, 1, 1}, {1, 2, 2}, {0, 2, 1}, {0, 3, 2}, {3, 4, 1}, {0, 4, 2}});
}

inline EdgeColoredGraph monochromatic_complete(std::size_t n, ecpart::Color c = 0) {
  std::vector<Edge> edges;
  for (ecpart::Vertex u = 0; u < n; ++u) {
    for (ecpart::Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, c});
  }
  return EdgeColoredGraph(n, std::move(edges));
}

inline EdgeColoredGraph star(std::size_t leaves, ecpart::Color c = 0) {
  std::vector<Edge> edges;
  for (ecpart::Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v, c});
  return EdgeColoredGraph(leaves + 1, std::move(edges));
}

}  // namespace fixture
