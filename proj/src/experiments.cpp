#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "ecpart/errors.hpp"
#include "ecpart/generators.hpp"
#include "ecpart/partition.hpp"
#include "ecpart/reductions.hpp"
#include "ecpart/rng.hpp"

namespace ecpart {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return Rng(seed, trial).next();
}

std::size_t default_threshold(const ConjectureParams& p) {
  if (p.conjectured_threshold) return *p.conjectured_threshold;
  if (p.mode == ConjectureMode::kAbFeasible) {
    return static_cast<std::size_t>(p.a + p.b + 1);
  }
  std::map<int, int> f;
  for (int i = 2; i <= static_cast<int>(p.k); ++i) f[i] = 2 * i - 1;
  return static_cast<std::size_t>(g_threshold(static_cast<int>(p.k), f));
}

}  // namespace

BermondThomassenReport bermond_thomassen_probe(const BermondThomassenParams& params,
                                               std::size_t samples, std::uint64_t seed) {
  if (params.n == 0 || samples == 0 || params.k == 0) {
    throw Error(Errc::kInvalidArgument, "n, k and samples must be positive");
  }
  const std::size_t d = params.min_out_degree.value_or(2 * params.k - 1);
  BermondThomassenReport report;
  for (std::size_t t = 0; t < samples; ++t) {
    const auto start = Clock::now();
    const std::uint64_t s = trial_seed(seed, t);
    // A complete starting orientation stays a tournament under path reversal.
    auto dg = random_oriented(params.n, d, s, params.tournament ? 1.0 : params.arc_prob);
    const auto result = find_k_disjoint_dicycles(dg, params.k, params.budget);

    TrialRecord rec;
    rec.trial_index = t;
    rec.seed = s;
    rec.n = params.n;
    rec.params = {{"k", std::to_string(params.k)},
                  {"min_out_degree", std::to_string(min_out_degree(dg))},
                  {"tournament", params.tournament ? "1" : "0"}};
    rec.outcome = result.status;
    rec.elapsed_ms = ms_since(start);
    report.trials.push_back(std::move(rec));
    if (result.is_found()) {
      ++report.successes;
    } else {
      report.candidates.push_back({t, s, std::move(dg)});
    }
  }
  return report;
}

TrialRecord conjecture_trial(const ConjectureParams& params, const EdgeColoredGraph& g,
                             std::size_t trial_index, std::uint64_t seed) {
  const auto start = Clock::now();
  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.seed = seed;
  rec.n = g.vertex_count();
  const std::size_t dc = g.vertex_count() == 0 ? 0 : min_color_degree(g);
  if (params.mode == ConjectureMode::kAbFeasible) {
    const PartitionTargets targets({params.a, params.b});
    rec.outcome = exact_partition_search(g, targets, params.budget).status;
    rec.params = {{"mode", "ab_feasible"},
                  {"a", std::to_string(params.a)},
                  {"b", std::to_string(params.b)}};
  } else {
    rec.outcome = partition_2k_pipeline(g, params.k, params.budget, seed).result.status;
    rec.params = {{"mode", "two_k"}, {"k", std::to_string(params.k)}};
  }
  rec.params.emplace_back("min_color_degree", std::to_string(dc));
  rec.params.emplace_back("complete", g.is_complete() ? "1" : "0");
  rec.elapsed_ms = ms_since(start);
  return rec;
}

ConjectureReport conjecture_probe(const ConjectureParams& params, std::size_t samples,
                                  std::uint64_t seed) {
  if (params.n == 0 || samples == 0) {
    throw Error(Errc::kInvalidArgument, "n and samples must be positive");
  }
  const std::size_t threshold = default_threshold(params);
  ConjectureReport report;
  for (std::size_t t = 0; t < samples; ++t) {
    const std::uint64_t s = trial_seed(seed, t);
    MinColorDegreeOptions opts;
    opts.edge_prob = params.complete ? 1.0 : params.edge_prob;
    auto g = random_ecg_min_cdeg(params.n, params.min_color_degree, params.colors, s, opts);
    auto rec = conjecture_trial(params, g, t, s);
    switch (rec.outcome) {
      case SearchStatus::kFound: ++report.found; break;
      case SearchStatus::kAbsent: ++report.absent; break;
      case SearchStatus::kExhausted: ++report.exhausted; break;
    }
    if (rec.outcome == SearchStatus::kAbsent && min_color_degree(g) >= threshold) {
      report.candidates.push_back({t, s, std::move(g)});
    }
    report.trials.push_back(std::move(rec));
  }
  return report;
}

std::string trials_to_csv(std::span<const TrialRecord> trials) {
  std::vector<const TrialRecord*> rows;
  for (const auto& t : trials) rows.push_back(&t);
  std::sort(rows.begin(), rows.end(),
            [](const TrialRecord* a, const TrialRecord* b) {
              return a->trial_index < b->trial_index;
            });
  std::ostringstream out;
  out << "trial_index,seed,n";
  if (!rows.empty()) {
    for (const auto& [name, value] : rows.front()->params) out << ',' << name;
  }
  out << ",outcome,elapsed_ms\n";
  for (const auto* r : rows) {
    out << r->trial_index << ',' << r->seed << ',' << r->n;
    for (const auto& [name, value] : r->params) out << ',' << value;
    out << ',' << status_name(r->outcome) << ',' << r->elapsed_ms << '\n';
  }
  return out.str();
}

std::vector<PsBoundRow> ps_bound_table(std::size_t max_k, std::size_t max_x) {
  if (max_k == 0 || max_x == 0) {
    throw Error(Errc::kInvalidArgument, "max_k and max_x must be positive");
  }
  std::vector<PsBoundRow> rows;
  for (std::size_t k = 1; k <= max_k; ++k) {
    // p_s only depends on the multiset of x_i, so nondecreasing tuples suffice.
    std::vector<std::vector<Dyadic>> dists;
    std::vector<std::size_t> xs(k, 1);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t lo) {
      if (i == k) {
        dists.push_back(presence_count_distribution(xs));
        return;
      }
      for (std::size_t x = lo; x <= max_x; ++x) {
        xs[i] = x;
        walk(i + 1, x);
      }
    };
    walk(0, 1);

    for (std::size_t x0 = 0; 2 * x0 <= k; ++x0) {
      PsBoundRow row;
      row.k = k;
      row.x0 = x0;
      row.vectors = dists.size();
      const Dyadic bound = p_s_bound(x0, k);
      Dyadic best;
      for (const auto& dist : dists) {
        Dyadic tail;
        for (std::size_t j = 0; j <= x0; ++j) tail += dist[j];
        best = std::max(best, tail);
        row.holds = row.holds && tail <= bound;
      }
      const std::vector<std::size_t> ones(k, 1);
      row.tight_at_ones = p_s_exact({x0, ones}) == bound;
      row.max_exact = best.to_string();
      row.bound = bound.to_string();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string ps_bound_csv(std::span<const PsBoundRow> rows) {
  std::ostringstream out;
  out << "k,x0,vectors,max_p_s,bound,holds,tight_at_ones\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.x0 << ',' << r.vectors << ',' << r.max_exact << ',' << r.bound
        << ',' << (r.holds ? 1 : 0) << ',' << (r.tight_at_ones ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace ecpart
