// Command-line front end for the ecpart library.
//
// Exit codes: 0 found / success, 2 absent or budget exhausted, 3 invalid
// input, 4 internal invariant violation.

#include <CLI11.hpp>

#include <deque>
#include <filesystem>
#include <iostream>
#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ecpart/errors.hpp"
#include "ecpart/generators.hpp"
#include "ecpart/io.hpp"
#include "ecpart/partition.hpp"
#include "ecpart/reductions.hpp"
#include "ecpart/structures.hpp"

namespace {

using namespace ecpart;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitInternal = 4;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? sep : "") << vs[i];
  return out.str();
}

std::string describe(const MinimalStructure& s) {
  std::ostringstream out;
  if (s.kind == StructureKind::kPCCycle) {
    out << "pc-cycle " << join(s.cycle().vertices) << '\n';
  } else {
    const auto& b = s.bowtie();
    out << "g-bowtie cycle1 " << join(b.cycle1) << " | cycle2 " << join(b.cycle2)
        << " | path " << join(b.path) << '\n';
  }
  return out.str();
}

// key=value pairs, given as repeated options or comma-separated.
class Params {
 public:
  explicit Params(const std::vector<std::string>& raw) {
    for (const auto& item : raw) {
      std::stringstream ss(item);
      std::string kv;
      while (std::getline(ss, kv, ',')) {
        if (kv.empty()) continue;
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
          throw Error(Errc::kInvalidArgument, "parameter '" + kv + "' is not key=value");
        }
        values_[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  template <typename T>
  T get(const std::string& key, T fallback) {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(key);
    std::istringstream in(it->second);
    T value{};
    if (!(in >> value) || !in.eof()) {
      throw Error(Errc::kInvalidArgument, "bad value for parameter " + key);
    }
    return value;
  }

  std::string get(const std::string& key, const std::string& fallback) {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    used_.insert(key);
    return it->second;
  }

  void reject_unknown() const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) throw Error(Errc::kInvalidArgument, "unknown parameter " + k);
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

// Sides of a connected bipartite graph, X containing vertex 0.
std::pair<VertexSet, VertexSet> bipartition(const EdgeColoredGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const auto& nb : g.neighbors(v)) {
        if (side[nb.vertex] < 0) {
          side[nb.vertex] = 1 - side[v];
          queue.push_back(nb.vertex);
        } else if (side[nb.vertex] == side[v]) {
          throw Error(Errc::kNotCompleteBipartite, "graph has an odd cycle");
        }
      }
    }
  }
  VertexSet x, y;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (side[v] == 0 ? x : y).push_back(v);
  return {x, y};
}

std::vector<int> parse_targets(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(Errc::kInvalidArgument, "bad target '" + tok + "'");
    }
  }
  if (out.empty()) throw Error(Errc::kInvalidArgument, "no targets given");
  return out;
}

// --- subcommands ---------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::size_t n = 5, m = 3, p = 3, q = 3, ell = 0, colors = 3, min_cdeg = 0, min_outdeg = 1;
  double edge_prob = 0.5;
  std::vector<std::size_t> parts;
  std::uint64_t seed = 0;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  const auto& k = a.kind;
  // The header comment pins the generator and random source; parsers skip it.
  auto put = [&](const std::string& text) {
    emit(a.out, "# generate " + k + " seed " + std::to_string(a.seed) + " rng " +
                    std::string(Rng::kName) + "\n" + text);
  };
  if (k == "rainbow-complete") {
    put(write_ecg(rainbow_complete(a.n)));
  } else if (k == "pc-cycle") {
    put(write_ecg(pc_cycle_graph(a.n)));
  } else if (k == "g-bowtie") {
    put(write_ecg(g_bowtie_graph(a.p, a.q, a.ell)));
  } else if (k == "random") {
    put(write_ecg(random_ecg(a.n, a.edge_prob, a.colors, a.seed)));
  } else if (k == "random-min-cdeg") {
    MinColorDegreeOptions opts;
    opts.edge_prob = a.edge_prob;
    put(write_ecg(random_ecg_min_cdeg(a.n, a.min_cdeg, a.colors, a.seed, opts)));
  } else if (k == "complete-bipartite") {
    put(write_ecg(random_complete_bipartite(a.m, a.n, a.colors, a.min_cdeg, a.seed)));
  } else if (k == "gallai-blowup") {
    const std::vector<Color> crossing{0, 1};
    const auto sizes = a.parts.empty() ? std::vector<std::size_t>{a.n / 2, a.n - a.n / 2}
                                       : a.parts;
    put(write_ecg(gallai_blowup(sizes, rainbow_internal(2), crossing, a.seed)));
  } else if (k == "oriented") {
    put(write_dg(random_oriented(a.n, a.min_outdeg, a.seed, a.edge_prob)));
  } else if (k == "tournament") {
    put(write_dg(random_tournament(a.n, a.seed)));
  } else if (k == "rotational-tournament") {
    put(write_dg(rotational_tournament(a.n)));
  } else {
    throw Error(Errc::kInvalidArgument, "unknown generator kind " + k);
  }
  return kExitOk;
}

int run_analyze(const std::string& file) {
  const auto g = parse_ecg(read_text_file(file));
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n'
      << "m " << g.edge_count() << '\n'
      << "colors " << g.colors().size() << '\n'
      << "min_color_degree " << (g.vertex_count() ? min_color_degree(g) : 0) << '\n';
  const auto tri = find_rainbow_triangle(g);
  out << "rainbow_triangle " << (tri ? "yes" : "no") << '\n'
      << "pc_cycle " << (has_pc_cycle(g) ? "yes" : "no") << '\n'
      << "vertex color_degree\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << v << ' ' << color_degree(g, v) << '\n';
  }
  std::cout << out.str();
  return kExitOk;
}

struct StructureArgs {
  std::string file;
  std::string mode = "minimalize";
  std::size_t k = 2;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

int run_structure(const StructureArgs& a) {
  const auto g = parse_ecg(read_text_file(a.file));
  if (a.mode == "minimalize") {
    std::cout << describe(minimalize_two_colored(g));
    return kExitOk;
  }
  if (a.mode == "pc-cycle") {
    const auto r = find_pc_cycle(g, a.budget);
    if (!r.is_found()) {
      std::cerr << "pc-cycle: " << status_name(r.status) << '\n';
      return kExitNegative;
    }
    std::cout << "pc-cycle " << join(r.value->vertices) << '\n';
    return kExitOk;
  }
  if (a.mode == "yeo") {
    if (has_pc_cycle(g)) {
      std::cerr << "yeo: graph has a properly colored cycle\n";
      return kExitNegative;
    }
    const auto z = find_yeo_vertex(g);
    if (!z) {
      std::cerr << "yeo: graph has no edges\n";
      return kExitNegative;
    }
    std::cout << "yeo-vertex " << *z << '\n';
    return kExitOk;
  }
  if (a.mode == "gbowtie") {
    const auto s = minimalize_two_colored(g);
    if (s.kind != StructureKind::kGBowtie) {
      std::cerr << "gbowtie: minimal structure is a properly colored cycle\n";
      return kExitNegative;
    }
    const auto sub = induced_subgraph(g, s.vertices());
    std::vector<Edge> local;
    for (const auto& e : s.edges) {
      local.push_back({*sub.to_local(e.u), *sub.to_local(e.v), e.color});
    }
    auto b = extract_structure_via_yeo(EdgeColoredGraph(sub.to_parent.size(), local));
    auto lift = [&](std::vector<Vertex>& vs) {
      for (auto& v : vs) v = sub.to_parent[v];
    };
    lift(b.cycle1);
    lift(b.cycle2);
    lift(b.path);
    b = canonical_bowtie(std::move(b));
    std::cout << "g-bowtie cycle1 " << join(b.cycle1) << " | cycle2 " << join(b.cycle2)
              << " | path " << join(b.path) << '\n';
    return kExitOk;
  }
  if (a.mode == "disjoint") {
    DisjointStructureOptions opts;
    opts.budget = a.budget;
    opts.seed = a.seed;
    const auto r = find_k_disjoint_structures(g, a.k, opts);
    if (!r.is_found()) {
      std::cerr << "disjoint: " << status_name(r.status) << '\n';
      return kExitNegative;
    }
    for (const auto& s : *r.value) std::cout << describe(s);
    return kExitOk;
  }
  throw Error(Errc::kInvalidArgument, "unknown structure mode " + a.mode);
}

struct PartitionArgs {
  std::string file;
  std::string targets;
  std::string method;
  std::uint64_t seed = 0;
  std::size_t max_tries = 100;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
};

int run_partition(const PartitionArgs& a) {
  const auto g = parse_ecg(read_text_file(a.file));
  const PartitionTargets targets(parse_targets(a.targets));
  const auto all_two = std::all_of(targets.values().begin(), targets.values().end(),
                                   [](int t) { return t == 2; });
  const std::string method = a.method.empty() ? (all_two ? "pipeline" : "exact") : a.method;

  auto need_a2 = [&]() {
    if (targets.size() != 2 || targets[1] != 2) {
      throw Error(Errc::kInvalidArgument, method + " needs targets a,2");
    }
    return targets[0];
  };

  SearchResult<PartitionCertificate> r;
  if (method == "pipeline") {
    if (!all_two) throw Error(Errc::kInvalidArgument, "pipeline needs every target equal to 2");
    r = partition_2k_pipeline(g, targets.size(), a.budget, a.seed).result;
  } else if (method == "exact") {
    r = exact_partition_search(g, targets, a.budget);
  } else if (method == "random") {
    r = random_partition(g, targets, a.seed, a.max_tries);
  } else if (method == "complete-a2") {
    r = SearchResult<PartitionCertificate>::found(
        partition_complete_a2(g, need_a2()).certificate);
  } else if (method == "bipartite-a2") {
    const int alpha = need_a2();
    const auto [x, y] = bipartition(g);
    r = SearchResult<PartitionCertificate>::found(partition_bipartite_a2(g, x, y, alpha));
  } else {
    throw Error(Errc::kInvalidArgument, "unknown method " + method);
  }

  if (!r.is_found()) {
    std::cerr << "partition: " << status_name(r.status) << " after " << r.steps << " steps\n";
    return kExitNegative;
  }
  emit(a.out, dump_certificate(certificate_to_json(*r.value, g)));
  return kExitOk;
}

int run_verify(const std::string& cert_file, const std::string& graph_file) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(cert_file));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kParseError, e.what());
  }
  const auto g = parse_ecg(read_text_file(graph_file));
  const auto report = verify_certificate(doc, g);
  if (!report.ok()) {
    for (const auto& p : report.problems) std::cerr << "verify: " << p << '\n';
    return kExitInvalid;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int run_reduce(const std::string& kind, const std::string& file, const std::string& out) {
  if (kind == "digraph-to-ecg") {
    emit(out, write_ecg(digraph_to_ecg(parse_dg(read_text_file(file)))));
  } else if (kind == "complete") {
    emit(out, write_ecg(ecg_to_complete(parse_ecg(read_text_file(file)))));
  } else {
    throw Error(Errc::kInvalidArgument, "unknown reduction " + kind);
  }
  return kExitOk;
}

int run_dicycles(const std::string& file, std::size_t k, std::uint64_t budget) {
  const auto d = parse_dg(read_text_file(file));
  const auto r = find_k_disjoint_dicycles(d, k, budget);
  if (!r.is_found()) {
    std::cerr << "dicycles: " << status_name(r.status) << " after " << r.steps << " steps\n";
    return kExitNegative;
  }
  for (const auto& c : r.value->cycles) std::cout << join(c) << '\n';
  return kExitOk;
}

struct ExperimentArgs {
  std::string kind;
  std::vector<std::string> params;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::string dump_dir = "candidates";
};

template <typename Candidate, typename Write>
void dump_candidates(const ExperimentArgs& a, const std::vector<Candidate>& cands,
                     const char* ext, Write write) {
  if (cands.empty()) return;
  std::filesystem::create_directories(a.dump_dir);
  for (const auto& c : cands) {
    const auto path = std::filesystem::path(a.dump_dir) /
                      (a.kind + "-trial" + std::to_string(c.trial_index) + "-seed" +
                       std::to_string(c.seed) + ext);
    write_text_file(path.string(), write(c));
    std::cerr << "candidate written to " << path.string() << '\n';
  }
}

int run_experiment(const ExperimentArgs& a) {
  Params p(a.params);
  if (a.kind == "ps-bound") {
    const auto rows = ps_bound_table(p.get<std::size_t>("max_k", 10), p.get<std::size_t>("max_x", 4));
    p.reject_unknown();
    emit(a.out, ps_bound_csv(rows));
    const bool holds = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds; });
    return holds ? kExitOk : kExitNegative;
  }
  if (a.kind == "bermond-thomassen") {
    BermondThomassenParams bt;
    bt.n = p.get<std::size_t>("n", bt.n);
    bt.k = p.get<std::size_t>("k", bt.k);
    if (p.has("min_outdeg")) bt.min_out_degree = p.get<std::size_t>("min_outdeg", 0);
    bt.arc_prob = p.get<double>("arc_prob", bt.arc_prob);
    bt.tournament = p.get<int>("tournament", 0) != 0;
    bt.budget = p.get<std::uint64_t>("budget", bt.budget);
    p.reject_unknown();
    const auto report = bermond_thomassen_probe(bt, a.samples, a.seed);
    emit(a.out, trials_to_csv(report.trials));
    std::cerr << "successes " << report.successes << " of " << report.trials.size() << '\n';
    dump_candidates(a, report.candidates, ".dg",
                    [](const DigraphCandidate& c) { return write_dg(c.digraph); });
    return report.candidates.empty() ? kExitOk : kExitNegative;
  }
  if (a.kind == "conjecture") {
    ConjectureParams cp;
    const auto mode = p.get("mode", std::string("ab"));
    if (mode == "ab" || mode == "ab_feasible") {
      cp.mode = ConjectureMode::kAbFeasible;
    } else if (mode == "two_k" || mode == "2k") {
      cp.mode = ConjectureMode::kTwoK;
    } else {
      throw Error(Errc::kInvalidArgument, "unknown conjecture mode " + mode);
    }
    cp.n = p.get<std::size_t>("n", cp.n);
    cp.min_color_degree = p.get<std::size_t>("cdeg", cp.min_color_degree);
    cp.colors = p.get<std::size_t>("colors", cp.colors);
    cp.edge_prob = p.get<double>("edge_prob", cp.edge_prob);
    cp.complete = p.get<int>("complete", 0) != 0;
    cp.a = p.get<int>("a", cp.a);
    cp.b = p.get<int>("b", cp.b);
    cp.k = p.get<std::size_t>("k", cp.k);
    if (p.has("threshold")) cp.conjectured_threshold = p.get<std::size_t>("threshold", 0);
    cp.budget = p.get<std::uint64_t>("budget", cp.budget);
    p.reject_unknown();
    const auto report = conjecture_probe(cp, a.samples, a.seed);
    emit(a.out, trials_to_csv(report.trials));
    std::cerr << "found " << report.found << " absent " << report.absent << " exhausted "
              << report.exhausted << '\n';
    dump_candidates(a, report.candidates, ".ecg",
                    [](const EcgCandidate& c) { return write_ecg(c.graph); });
    return report.candidates.empty() ? kExitOk : kExitNegative;
  }
  throw Error(Errc::kInvalidArgument, "unknown experiment " + a.kind);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex partitions of edge-colored graphs under color-degree constraints"};
  app.require_subcommand(1);
  int code = kExitOk;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("kind", gen.kind,
                       "rainbow-complete|pc-cycle|g-bowtie|random|random-min-cdeg|"
                       "complete-bipartite|gallai-blowup|oriented|tournament|"
                       "rotational-tournament")
      ->required();
  generate->add_option("--n", gen.n, "vertex count (second side for complete-bipartite)");
  generate->add_option("--m", gen.m, "first side for complete-bipartite");
  generate->add_option("--p", gen.p, "first cycle length");
  generate->add_option("--q", gen.q, "second cycle length");
  generate->add_option("--ell", gen.ell, "connecting path length");
  generate->add_option("--colors", gen.colors, "palette size");
  generate->add_option("--min-cdeg", gen.min_cdeg, "minimum color degree");
  generate->add_option("--min-outdeg", gen.min_outdeg, "minimum out-degree");
  generate->add_option("--edge-prob", gen.edge_prob, "edge or arc probability");
  generate->add_option("--parts", gen.parts, "part sizes for gallai-blowup")->delimiter(',');
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("-o,--output", gen.out, "output file (default stdout)");
  generate->callback([&] { code = run_generate(gen); });

  std::string analyze_file;
  auto* analyze = app.add_subcommand("analyze", "Print color-degree statistics");
  analyze->add_option("file", analyze_file)->required();
  analyze->callback([&] { code = run_analyze(analyze_file); });

  StructureArgs st;
  auto* structure = app.add_subcommand("structure", "Find minimal structures");
  structure->add_option("file", st.file)->required();
  structure->add_option("--mode", st.mode, "minimalize|pc-cycle|yeo|gbowtie|disjoint");
  structure->add_option("--k", st.k, "number of disjoint structures");
  structure->add_option("--budget", st.budget, "search step limit");
  structure->add_option("--seed", st.seed, "restart seed");
  structure->callback([&] { code = run_structure(st); });

  PartitionArgs pa;
  auto* partition = app.add_subcommand("partition", "Find a feasible vertex partition");
  partition->add_option("file", pa.file)->required();
  partition->add_option("--targets", pa.targets, "comma-separated targets")->required();
  partition->add_option("--method", pa.method,
                        "pipeline|exact|random|complete-a2|bipartite-a2");
  partition->add_option("--seed", pa.seed);
  partition->add_option("--max-tries", pa.max_tries);
  partition->add_option("--budget", pa.budget);
  partition->add_option("-o,--output", pa.out, "certificate file (default stdout)");
  partition->callback([&] { code = run_partition(pa); });

  std::string cert_file, graph_file;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("certificate", cert_file)->required();
  verify->add_option("graph", graph_file)->required();
  verify->callback([&] { code = run_verify(cert_file, graph_file); });

  std::string reduce_kind, reduce_file, reduce_out;
  auto* reduce = app.add_subcommand("reduce", "Apply a graph reduction");
  reduce->add_option("kind", reduce_kind, "digraph-to-ecg|complete")->required();
  reduce->add_option("file", reduce_file)->required();
  reduce->add_option("-o,--output", reduce_out);
  reduce->callback([&] { code = run_reduce(reduce_kind, reduce_file, reduce_out); });

  std::string dc_file;
  std::size_t dc_k = 2;
  std::uint64_t dc_budget = kDefaultBudget;
  auto* dicycles = app.add_subcommand("dicycles", "Find disjoint directed cycles");
  dicycles->add_option("file", dc_file)->required();
  dicycles->add_option("--k", dc_k);
  dicycles->add_option("--budget", dc_budget);
  dicycles->callback([&] { code = run_dicycles(dc_file, dc_k, dc_budget); });

  ExperimentArgs ex;
  auto* experiment = app.add_subcommand("experiment", "Run a seeded experiment");
  experiment->add_option("kind", ex.kind, "conjecture|bermond-thomassen|ps-bound")->required();
  experiment->add_option("--params", ex.params, "key=value[,key=value...]");
  experiment->add_option("--samples", ex.samples);
  experiment->add_option("--seed", ex.seed);
  experiment->add_option("-o,--output", ex.out, "CSV file (default stdout)");
  experiment->add_option("--dump-dir", ex.dump_dir, "directory for counterexample candidates");
  experiment->callback([&] { code = run_experiment(ex); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.code()) ? kExitInternal : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return code;
}
