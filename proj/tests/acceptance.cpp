// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "ecpart/errors.hpp"
#include "ecpart/generators.hpp"
#include "ecpart/io.hpp"
#include "ecpart/partition.hpp"
#include "ecpart/reductions.hpp"
#include "ecpart/structures.hpp"
#include "oracles.hpp"

using namespace ecpart;
namespace fs = std::filesystem;

namespace {

// Pinned sample sizes and tolerances.
constexpr std::size_t kClassificationGraphs = 10000;
constexpr std::size_t kRandomPcSmall = 100000;
constexpr std::size_t kRandomPcLarge = 10000;
constexpr std::size_t kTwoTwoInstances = 1000;
constexpr double kTightnessSeconds = 10.0;
constexpr std::size_t kRandomSplitInstances = 200;
constexpr std::size_t kRandomSplitTries = 100;
constexpr double kRandomSplitSuccessRate = 0.99;
constexpr std::size_t kCompleteInstances = 200;
constexpr std::size_t kBipartiteInstances = 200;
constexpr std::size_t kReductionRandom = 10000;
constexpr std::size_t kDicycleInstances = 500;

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool certificate_verifies(const EdgeColoredGraph& g, const PartitionCertificate& c) {
  const auto check = check_partition(g, c.parts, c.targets);
  return check.ok() && check.certificate->witnesses == c.witnesses &&
         verify_certificate(certificate_to_json(c, g), g).ok();
}

EdgeColoredGraph structure_graph(std::size_t n, const MinimalStructure& s) {
  return EdgeColoredGraph(n, s.edges);
}

// --- 1 --------------------------------------------------------------------------

Outcome minimal_structure_classification() {
  std::size_t graphs = 0, cycles = 0, bowties = 0, failures = 0, multi_color = 0,
              with_pc_cycle = 0, bad_degree = 0, bad_cycle = 0;
  std::map<std::size_t, std::size_t> palette_sizes;
  for (std::uint64_t seed = 0; graphs < kClassificationGraphs; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const std::size_t colors = 2 + seed % 3;
    const double p = 0.25 + 0.05 * static_cast<double>(seed % 5);
    const auto g = random_ecg(n, p, colors, seed);
    if (two_color_core(g).empty()) continue;
    ++graphs;
    try {
      const auto s = minimalize_two_colored(g);
      const auto h = structure_graph(n, s);
      if (s.kind == StructureKind::kPCCycle) {
        ++cycles;
        if (!is_pc_cycle(g, s.cycle())) ++bad_cycle;
        continue;
      }
      ++bowties;
      ++palette_sizes[h.colors().size()];
      if (h.colors().size() != 2) ++multi_color;
      if (has_pc_cycle(h)) ++with_pc_cycle;
      for (Vertex v : s.vertices()) {
        if (color_degree(h, v) != 2) ++bad_degree;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::kClassificationFailure) throw;
      ++failures;
    }
  }
  std::ostringstream d;
  d << graphs << " graphs, " << cycles << " PC cycles, " << bowties << " g-bowties; "
    << failures << " classification failures, " << with_pc_cycle
    << " bowties with a PC cycle, " << bad_degree << " bowtie vertices with color degree != 2, "
    << multi_color << " bowties with more than 2 colors (palette sizes:";
  for (const auto& [k, c] : palette_sizes) d << ' ' << k << "->" << c;
  d << ")";
  return {failures == 0 && with_pc_cycle == 0 && multi_color == 0 && bad_cycle == 0 &&
              bad_degree == 0,
          d.str()};
}

// --- 2 --------------------------------------------------------------------------

Outcome pc_cycle_decision() {
  std::size_t checked = 0, disagreements = 0;
  auto compare = [&](const EdgeColoredGraph& g) {
    ++checked;
    if (has_pc_cycle(g) != oracle::has_pc_cycle(g)) ++disagreements;
  };
  // Every graph on n <= 5 labelled vertices with at most 3 colors.
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * pairs)); ++code) {
      std::vector<Edge> edges;
      std::uint64_t rest = code;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const auto digit = rest & 3;
          rest >>= 2;
          if (digit) edges.push_back({u, v, static_cast<Color>(digit - 1)});
        }
      }
      compare(EdgeColoredGraph(n, std::move(edges)));
    }
  }
  const std::size_t exhaustive = checked;
  for (std::uint64_t seed = 0; seed < kRandomPcSmall; ++seed) {
    compare(random_ecg(6, 0.3 + 0.1 * static_cast<double>(seed % 5), 1 + seed % 3, seed));
  }
  for (std::uint64_t seed = 0; seed < kRandomPcLarge; ++seed) {
    compare(random_ecg(7 + seed % 3, 0.2 + 0.1 * static_cast<double>(seed % 4), 2 + seed % 3,
                       seed + 1000000));
  }
  std::ostringstream d;
  d << exhaustive << " exhaustive (n<=5, <=3 colors) + " << kRandomPcSmall << " random n=6 + "
    << kRandomPcLarge << " random n in 7..9; " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

// --- 3 --------------------------------------------------------------------------

Outcome two_two_regime() {
  std::size_t structures = 0, fallback = 0, unsolved = 0, exact_absent = 0,
              exact_exhausted = 0, bad = 0;
  for (std::uint64_t seed = 0; seed < kTwoTwoInstances; ++seed) {
    const std::size_t n = 6 + seed % 5;
    MinColorDegreeOptions opts;
    opts.edge_prob = 0.3 + 0.1 * static_cast<double>(seed % 5);
    const auto g = random_ecg_min_cdeg(n, 5, 5 + seed % 8, seed, opts);
    const auto p = partition_2k_pipeline(g, 2, kDefaultBudget, seed);
    const auto e = exact_partition_search(g, PartitionTargets({2, 2}));
    if (e.is_absent()) ++exact_absent;
    if (e.is_exhausted()) ++exact_exhausted;
    if (p.result.is_found()) {
      (p.route == PipelineRoute::kStructures ? structures : fallback)++;
      if (!certificate_verifies(g, *p.result.value)) ++bad;
    } else {
      ++unsolved;
    }
  }
  std::ostringstream d;
  d << kTwoTwoInstances << " instances (n 6..10, min color degree >= 5): " << structures
    << " via structures, " << fallback << " via exact fallback, " << unsolved
    << " unsolved, " << bad << " bad certificates; exact search absent " << exact_absent
    << ", exhausted " << exact_exhausted;
  return {unsolved == 0 && bad == 0 && exact_absent == 0 && exact_exhausted == 0, d.str()};
}

// --- 4 --------------------------------------------------------------------------

Outcome tightness() {
  bool ok = true;
  std::ostringstream d;
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = exact_partition_search(rainbow_complete(static_cast<std::size_t>(a + b + 1)),
                                          PartitionTargets({a, b}));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool here = r.is_absent() && secs <= kTightnessSeconds;
    ok = ok && here;
    d << "(" << a << "," << b << ") " << status_name(r.status) << " in " << secs << "s; ";
  }
  d << "limit " << kTightnessSeconds << "s each";
  return {ok, d.str()};
}

// --- 5 --------------------------------------------------------------------------

Outcome probability_bound() {
  std::size_t vectors = 0, comparisons = 0, violations = 0, untight = 0, kernel_mismatch = 0;
  for (std::size_t k = 1; k <= 10; ++k) {
    std::vector<Dyadic> bound;
    for (std::size_t x0 = 0; 2 * x0 <= k; ++x0) bound.push_back(p_s_bound(x0, k));
    std::vector<std::size_t> xs(k, 1);
    for (;;) {
      ++vectors;
      const auto dist = presence_count_distribution(xs);
      const bool sorted = std::is_sorted(xs.begin(), xs.end());
      const bool ones = std::all_of(xs.begin(), xs.end(), [](std::size_t x) { return x == 1; });
      Dyadic tail;
      for (std::size_t x0 = 0; 2 * x0 <= k; ++x0) {
        tail += dist[x0];
        ++comparisons;
        if (tail > bound[x0]) ++violations;
        if (ones && tail != bound[x0]) ++untight;
        if (sorted && p_s_exact({x0, xs}) != tail) ++kernel_mismatch;
      }
      std::size_t i = 0;
      while (i < k && ++xs[i] > 4) xs[i++] = 1;
      if (i == k) break;
    }
  }
  std::ostringstream d;
  d << vectors << " vectors (k<=10, x_i<=4), " << comparisons << " exact comparisons: "
    << violations << " violations, " << untight << " non-tight all-ones cases, "
    << kernel_mismatch << " kernel mismatches; tolerance 0";
  return {violations == 0 && untight == 0 && kernel_mismatch == 0, d.str()};
}

// --- 6 --------------------------------------------------------------------------

Outcome random_split_regime() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t n : {32u, 64u}) {
    const auto threshold = random_partition_threshold(n, 2);
    std::size_t success = 0, bad = 0;
    for (std::uint64_t seed = 0; seed < kRandomSplitInstances; ++seed) {
      MinColorDegreeOptions opts;
      opts.edge_prob = 0.25;
      const auto g = random_ecg_min_cdeg(n, threshold, 2 * threshold, seed, opts);
      const auto r = random_partition(g, PartitionTargets({2, 2}), seed, kRandomSplitTries);
      if (r.is_found()) {
        ++success;
        if (!certificate_verifies(g, *r.value)) ++bad;
      }
    }
    const double rate = static_cast<double>(success) / kRandomSplitInstances;
    ok = ok && rate >= kRandomSplitSuccessRate && bad == 0;
    d << "n=" << n << " threshold " << threshold << ": " << success << "/"
      << kRandomSplitInstances << " within " << kRandomSplitTries << " tries; ";
  }
  d << "required rate " << kRandomSplitSuccessRate;
  return {ok, d.str()};
}

// --- 7 --------------------------------------------------------------------------

// Two parts, each internally colored from its own palette, one crossing color.
EdgeColoredGraph two_part_blowup(int a, std::uint64_t seed) {
  const std::size_t low = static_cast<std::size_t>(a) + 3;
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed, attempt);
    const std::size_t s1 = low + rng.below(13 - 2 * low), s2 = low + rng.below(13 - low - s1);
    const std::vector<std::size_t> sizes{s1, s2};
    const std::vector<Color> crossing{0};
    const auto internal = rng.coin() ? rainbow_internal(1) : random_internal(1, 3 * low);
    const auto g = gallai_blowup(sizes, internal, crossing, rng.next());
    if (min_color_degree(g) >= low) return g;
  }
}

Outcome complete_regime() {
  std::size_t triangle = 0, gallai = 0, bad = 0, errors = 0, blowups = 0;
  for (std::uint64_t seed = 0; seed < kCompleteInstances; ++seed) {
    const int a = 2 + static_cast<int>(seed % 2);
    const std::size_t low = static_cast<std::size_t>(a) + 3;
    EdgeColoredGraph g;
    if (seed % 4 < 2) {
      MinColorDegreeOptions opts;
      opts.edge_prob = 1.0;
      const std::size_t n = low + 1 + seed % (12 - low);
      g = random_ecg_min_cdeg(n, low, low + seed % 6, seed, opts);
    } else {
      g = two_part_blowup(a, seed);
      ++blowups;
    }
    try {
      const auto r = partition_complete_a2(g, a);
      (r.route == CompleteRoute::kGallai ? gallai : triangle)++;
      if (!certificate_verifies(g, r.certificate) || r.certificate.targets[0] != a ||
          r.certificate.targets[1] != 2) {
        ++bad;
      }
    } catch (const Error&) {
      ++errors;
    }
  }
  std::ostringstream d;
  d << kCompleteInstances << " complete instances (a in {2,3}, n<=12, " << blowups
    << " Gallai blow-ups): " << triangle << " rainbow-triangle route, " << gallai
    << " Gallai route, " << bad << " bad certificates, " << errors << " errors";
  return {bad == 0 && errors == 0, d.str()};
}

// --- 8 --------------------------------------------------------------------------

Outcome bipartite_regime() {
  std::size_t c4_found = 0, c4_mismatch = 0, parts_ok = 0, parts_bad = 0;
  auto sides = [](std::size_t m, std::size_t n) {
    VertexSet x, y;
    for (Vertex v = 0; v < m + n; ++v) (v < m ? x : y).push_back(v);
    return std::make_pair(x, y);
  };
  for (std::uint64_t seed = 0; seed < kBipartiteInstances; ++seed) {
    const std::size_t m = 3 + seed % 4, n = 3 + (seed / 4) % 4;
    const auto g = random_complete_bipartite(m, n, 3 + seed % 5, 3, seed);
    const auto [x, y] = sides(m, n);
    const auto c = find_pc_c4_bipartite(g, x, y);
    if (c && is_pc_cycle(g, *c) && c->vertices.size() == 4) ++c4_found;
    if (c.has_value() != oracle::has_pc_c4(g, x, y) || !c) ++c4_mismatch;

    const std::size_t m2 = 4 + seed % 3, n2 = 4 + (seed / 3) % 3;
    const auto h = random_complete_bipartite(m2, n2, 4 + seed % 5, 4, seed + 7777);
    const auto [x2, y2] = sides(m2, n2);
    try {
      const auto cert = partition_bipartite_a2(h, x2, y2, 2);
      (certificate_verifies(h, cert) ? parts_ok : parts_bad)++;
    } catch (const Error&) {
      ++parts_bad;
    }
  }
  std::ostringstream d;
  d << kBipartiteInstances << " instances (min color degree >= 3, sides 3..6): PC C4 found "
    << c4_found << ", oracle mismatches " << c4_mismatch << "; (2,2) partitions at >= 4: "
    << parts_ok << " verified, " << parts_bad << " failed";
  return {c4_found == kBipartiteInstances && c4_mismatch == 0 && parts_bad == 0, d.str()};
}

// --- 9 --------------------------------------------------------------------------

Outcome reduction_identity() {
  std::size_t digraphs = 0, violations = 0;
  auto check = [&](const Digraph& d) {
    ++digraphs;
    const auto g = digraph_to_ecg(d);
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
      if (color_degree(g, v) != d.out_degree(v) + (d.in_degree(v) > 0 ? 1 : 0)) ++violations;
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * (n - 1) / 2; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Digraph::Arc> arcs;
      std::uint64_t rest = code;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (rest % 3 == 1) arcs.push_back({u, v});
          if (rest % 3 == 2) arcs.push_back({v, u});
          rest /= 3;
        }
      }
      check(Digraph(n, std::move(arcs), true));
    }
  }
  const std::size_t exhaustive = digraphs;
  for (std::uint64_t seed = 0; seed < kReductionRandom; ++seed) {
    const std::size_t n = 6 + seed % 25;
    check(random_oriented(n, seed % ((n - 1) / 2 + 1), seed,
                          0.1 + 0.1 * static_cast<double>(seed % 9)));
  }
  std::ostringstream d;
  d << exhaustive << " oriented graphs (n<=5, all) + " << kReductionRandom
    << " random (n 6..30); " << violations << " violations";
  return {violations == 0, d.str()};
}

// --- 10 -------------------------------------------------------------------------

Outcome bermond_thomassen() {
  std::size_t found = 0, confirmed_absent = 0, unconfirmed = 0;
  for (std::uint64_t seed = 0; seed < kDicycleInstances; ++seed) {
    const std::size_t n = 7 + seed % 3;
    const auto d = random_oriented(n, 3, seed, 0.2 + 0.1 * static_cast<double>(seed % 8));
    const auto r = find_k_disjoint_dicycles(d, 2);
    if (r.is_found() && is_dicycle_set(d, *r.value) && r.value->cycles.size() == 2) {
      ++found;
    } else if (oracle::has_k_disjoint_dicycles(d, 2)) {
      ++unconfirmed;
    } else {
      ++confirmed_absent;
    }
  }
  std::ostringstream d;
  d << kDicycleInstances << " oriented graphs (n 7..9, min out-degree >= 3): " << found
    << " found, " << unconfirmed << " missed but present, " << confirmed_absent
    << " confirmed absent";
  return {found == kDicycleInstances, d.str()};
}

// --- 11 -------------------------------------------------------------------------

Outcome threshold_arithmetic() {
  bool ok = g_threshold(2, {{2, 3}}) == 5;
  for (long long k = 2; k <= 10; ++k) ok = ok && bound_chain(3, k) == 3 * k - 1;
  return {ok, "g(2) with f(2)=3 is " + std::to_string(g_threshold(2, {{2, 3}})) +
                  "; bound_chain(3,k) = 3k-1 checked for k 2..10"};
}

// --- 12 -------------------------------------------------------------------------

class Shell {
 public:
  Shell() : dir_(fs::temp_directory_path() / ("ecpart-accept-" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Shell() { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  int run(const std::string& args) const {
    const std::string cmd = std::string(ECPART_CLI) + " " + args + " > " + path("stdout") +
                            " 2> " + path("stderr");
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

 private:
  fs::path dir_;
};

Outcome end_to_end() {
  const Shell sh;
  std::vector<fs::path> ecg, dg;
  for (const auto& entry : fs::directory_iterator(ECPART_TEST_DATA)) {
    if (entry.path().extension() == ".ecg") ecg.push_back(entry.path());
    if (entry.path().extension() == ".dg") dg.push_back(entry.path());
  }
  std::sort(ecg.begin(), ecg.end());
  std::sort(dg.begin(), dg.end());

  std::size_t invocations = 0, certificates = 0, rejected = 0, roundtrips = 0, drift = 0;
  std::size_t cert_id = 0;
  for (const auto& file : ecg) {
    const auto g = parse_ecg(read_text_file(file.string()));
    std::vector<std::string> runs{"--targets 2,2 --method pipeline",
                                  "--targets 2,2 --method exact", "--targets 1,1 --method exact",
                                  "--targets 2,1 --method exact",
                                  "--targets 2,2 --method random --seed 3 --max-tries 5000"};
    if (g.is_complete()) runs.push_back("--targets 2,2 --method complete-a2");
    if (file.filename() == "rainbow_k44.ecg") {
      runs.push_back("--targets 2,2 --method bipartite-a2");
      runs.push_back("--targets 1,2 --method bipartite-a2");
    }
    for (const auto& args : runs) {
      const auto cert = sh.path("cert" + std::to_string(cert_id++) + ".json");
      ++invocations;
      if (sh.run("partition " + file.string() + " " + args + " -o " + cert) != 0) continue;
      ++certificates;
      if (sh.run("verify " + cert + " " + file.string()) != 0) ++rejected;
      const auto text = read_text_file(cert);
      ++roundtrips;
      if (dump_certificate(nlohmann::json::parse(text)) != text) ++drift;
    }
    const auto once = write_ecg(g);
    ++roundtrips;
    if (write_ecg(parse_ecg(once)) != once) ++drift;
  }
  for (const auto& file : dg) {
    const auto once = write_dg(parse_dg(read_text_file(file.string())));
    ++roundtrips;
    if (write_dg(parse_dg(once)) != once) ++drift;
  }
  std::size_t canonical = 0;
  for (const auto& file : ecg) {
    const auto text = read_text_file(file.string());
    if (text.rfind("ecg", 0) == 0) {
      ++canonical;
      ++roundtrips;
      if (write_ecg(parse_ecg(text)) != text) ++drift;
    }
  }
  for (const char* kind : {"random-min-cdeg --n 10 --min-cdeg 4 --colors 6",
                           "oriented --n 9 --min-outdeg 3", "gallai-blowup --parts 3,4 --colors 5"}) {
    ++roundtrips;
    const auto out = sh.path("gen.txt");
    if (sh.run(std::string("generate ") + kind + " --seed 5 -o " + out) != 0) {
      ++drift;
      continue;
    }
    const auto text = read_text_file(out);
    const auto body = text.substr(text.find('\n') + 1);
    const bool directed = body.rfind("dg", 0) == 0;
    const auto again = directed ? write_dg(parse_dg(text)) : write_ecg(parse_ecg(text));
    if (again != body) ++drift;
  }
  std::ostringstream d;
  d << invocations << " partition runs on " << ecg.size() << " corpus graphs produced "
    << certificates << " certificates, " << rejected << " rejected by verify; " << roundtrips
    << " format round trips (" << canonical << " canonical files), " << drift
    << " not byte-identical";
  return {certificates > 0 && rejected == 0 && drift == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"minimal structures classify", minimal_structure_classification},
      {"PC-cycle decision", pc_cycle_decision},
      {"(2,2) partitions at color degree 5", two_two_regime},
      {"rainbow complete tightness", tightness},
      {"presence probability bound", probability_bound},
      {"randomized split", random_split_regime},
      {"complete (a,2) partitions", complete_regime},
      {"complete bipartite graphs", bipartite_regime},
      {"head-coloring degree identity", reduction_identity},
      {"two disjoint directed cycles", bermond_thomassen},
      {"threshold arithmetic", threshold_arithmetic},
      {"CLI certificates and formats", end_to_end},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << ": " << o.detail << " [" << secs << "s]" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
