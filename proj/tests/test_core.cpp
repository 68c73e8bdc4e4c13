#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ecpart/core.hpp"
#include "ecpart/errors.hpp"
#include "ecpart/generators.hpp"
#include "ecpart/rng.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ecpart;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ecpart::Error");
  return Errc::kInvariantViolation;
}

// Peels vertices below color degree 2 in a random order.
VertexSet shuffled_peel(const EdgeColoredGraph& g, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> alive(n, 1);
  Rng rng(seed);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    rng.shuffle(order);
    for (Vertex v : order) {
      if (alive[v] && color_degree_into(g, v, alive) < 2) {
        alive[v] = 0;
        changed = true;
        break;
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("construction normalizes and validates edges") {
  const EdgeColoredGraph g(3, {{2, 0, 5}, {1, 0, 4}});
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 4});
  CHECK(g.edges()[1] == Edge{0, 2, 5});
  CHECK(g.edge_color(2, 0) == 5u);
  CHECK_FALSE(g.has_edge(1, 2));

  CHECK(code_of([] { EdgeColoredGraph(3, {{1, 1, 0}}); }) == Errc::kInvalidGraph);
  CHECK(code_of([] { EdgeColoredGraph(3, {{0, 1, 0}, {1, 0, 2}}); }) == Errc::kInvalidGraph);
  CHECK(code_of([] { EdgeColoredGraph(3, {{0, 3, 0}}); }) == Errc::kInvalidGraph);
}

TEST_CASE("digraph construction") {
  const Digraph d(3, {{0, 1}, {1, 2}, {2, 0}}, true);
  CHECK(d.out_degree(0) == 1);
  CHECK(d.in_degree(0) == 1);
  CHECK(d.has_arc(2, 0));
  CHECK_FALSE(d.has_arc(0, 2));
  CHECK(code_of([] { Digraph(2, {{0, 1}, {1, 0}}, true); }) == Errc::kNotOriented);
  CHECK(code_of([] { Digraph(2, {{0, 0}}); }) == Errc::kInvalidGraph);
  CHECK_FALSE(Digraph(2, {{0, 1}, {1, 0}}).has_no_digons());
}

TEST_CASE("partition targets") {
  CHECK(PartitionTargets({2, 3}).extension_threshold() == 4);
  CHECK(PartitionTargets::uniform(3, 2).extension_threshold() == 4);
  CHECK(code_of([] { PartitionTargets(std::vector<int>{}); }) == Errc::kInvalidArgument);
  CHECK(code_of([] { PartitionTargets({2, 0}); }) == Errc::kInvalidArgument);
}

TEST_CASE("color degree examples") {
  const auto k4 = rainbow_complete(4);
  for (Vertex v = 0; v < 4; ++v) CHECK(color_degree(k4, v) == 3);
  CHECK(color_degree(fixture::star(4), 0) == 1);
  CHECK(color_degree(fixture::bowtie(), 0) == 2);
  CHECK(code_of([&] { color_degree(k4, 4); }) == Errc::kInvalidArgument);
}

TEST_CASE("minimum color degree examples") {
  CHECK(min_color_degree(rainbow_complete(5)) == 4);
  CHECK(min_color_degree(fixture::alternating_c4()) == 2);
  CHECK(min_color_degree(EdgeColoredGraph(3, {{0, 1, 0}})) == 0);
  CHECK(code_of([] { min_color_degree(EdgeColoredGraph(0, {})); }) == Errc::kInvalidArgument);
}

TEST_CASE("colors between two vertex sets") {
  const auto k4 = rainbow_complete(4);
  const VertexSet a{0}, b{1, 2}, c{3}, d{0, 1};
  CHECK(color_set_between(k4, a, b).size() == 2);
  CHECK(color_set_between(fixture::two_c4(), VertexSet{0, 1, 2, 3}, VertexSet{4, 5}).empty());
  CHECK(code_of([&] { color_set_between(k4, a, d); }) == Errc::kInvalidArgument);

  const std::vector<std::size_t> sizes{3, 4};
  const std::vector<Color> crossing{0};
  const auto blow = gallai_blowup(sizes, rainbow_internal(10), crossing, 1);
  CHECK(color_set_between(blow, VertexSet{0, 1, 2}, VertexSet{3, 4, 5, 6}) == ColorSet{0});
}

TEST_CASE("color classes") {
  const auto k3 = fixture::monochromatic_complete(3, 7);
  CHECK(color_class(k3, 7) == k3);
  CHECK(color_class(k3, 1).edge_count() == 0);
  const auto matching = color_class(fixture::alternating_c4(), 1);
  CHECK(matching.edge_count() == 2);
  for (Vertex v = 0; v < 4; ++v) CHECK(matching.degree(v) == 1);
}

TEST_CASE("induced subgraphs") {
  const auto g = fixture::bowtie();
  const VertexSet all{0, 1, 2, 3, 4};
  CHECK(induced_subgraph(g, all).graph == g);
  const auto one = induced_subgraph(g, VertexSet{3});
  CHECK(one.graph.vertex_count() == 1);
  CHECK(one.graph.edge_count() == 0);
  const auto tri = induced_subgraph(rainbow_complete(5), VertexSet{1, 3, 4});
  CHECK(tri.graph.edge_count() == 3);
  CHECK(tri.graph.colors().size() == 3);
  CHECK(tri.to_parent == std::vector<Vertex>{1, 3, 4});
  CHECK(tri.to_local(3) == 1u);
  CHECK_FALSE(tri.to_local(2).has_value());
  CHECK(code_of([&] { induced_subgraph(g, VertexSet{5}); }) == Errc::kInvalidArgument);
}

TEST_CASE("two-color core examples") {
  CHECK(two_color_core(fixture::monochromatic_complete(5)).empty());
  const EdgeColoredGraph c4_pendant(5, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {0, 3, 2}, {3, 4, 1}});
  CHECK(two_color_core(c4_pendant) == VertexSet{0, 1, 2, 3});
  const EdgeColoredGraph p4(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}});
  CHECK(two_color_core(p4).empty());
}

TEST_CASE("minimum out-degree examples") {
  CHECK(min_out_degree(Digraph(3, {{0, 1}, {1, 2}, {2, 0}})) == 1);
  CHECK(min_out_degree(Digraph(3, {{0, 1}, {0, 2}, {1, 2}})) == 0);
  CHECK(min_out_degree(rotational_tournament(5)) == 2);
  CHECK(code_of([] { min_out_degree(Digraph(0, {})); }) == Errc::kInvalidArgument);
}

TEST_CASE("color degree never exceeds degree; equality iff incident colors distinct") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_ecg(9, 0.5, 4, seed);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      std::set<Color> cs;
      for (const auto& nb : g.neighbors(v)) cs.insert(nb.color);
      CHECK(color_degree(g, v) <= g.degree(v));
      CHECK((color_degree(g, v) == g.degree(v)) == (cs.size() == g.degree(v)));
    }
  }
}

TEST_CASE("two-color core is maximal and independent of deletion order") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const auto g = random_ecg(n, 0.4, 3, seed);
    const auto core = two_color_core(g);
    CHECK(shuffled_peel(g, seed) == core);
    CHECK(shuffled_peel(g, seed + 1000) == core);
    if (n <= 10) CHECK(oracle::two_color_core(g) == core);
    if (!core.empty()) CHECK(min_color_degree(induced_subgraph(g, core).graph) >= 2);
  }
}

TEST_CASE("colors between sets come from the graph and are bounded by crossing edges") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_ecg(8, 0.6, 5, seed);
    Rng rng(seed, 9);
    VertexSet m, n;
    std::size_t crossing = 0;
    for (Vertex v = 0; v < 8; ++v) {
      const auto r = rng.below(3);
      if (r == 0) m.push_back(v);
      if (r == 1) n.push_back(v);
    }
    for (const auto& e : g.edges()) {
      const bool um = std::binary_search(m.begin(), m.end(), e.u);
      const bool vm = std::binary_search(m.begin(), m.end(), e.v);
      const bool un = std::binary_search(n.begin(), n.end(), e.u);
      const bool vn = std::binary_search(n.begin(), n.end(), e.v);
      crossing += ((um && vn) || (un && vm)) ? 1 : 0;
    }
    const auto between = color_set_between(g, m, n);
    const auto all = g.colors();
    CHECK(std::includes(all.begin(), all.end(), between.begin(), between.end()));
    CHECK(between.size() <= crossing);
  }
}
