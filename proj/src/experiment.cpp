#include "taulab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "taulab/bounds.hpp"
#include "taulab/census.hpp"
#include "taulab/errors.hpp"
#include "taulab/lazy_random_graph.hpp"
#include "taulab/tree_families.hpp"

namespace taulab {

const char* to_string(Regime r) noexcept {
  switch (r) {
    case Regime::kDense: return "dense";
    case Regime::kSparse: return "sparse";
    case Regime::kVerysparse: return "verysparse";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view text) {
  if (text == "dense") return Regime::kDense;
  if (text == "sparse") return Regime::kSparse;
  if (text == "verysparse") return Regime::kVerysparse;
  return std::nullopt;
}

DenseRun run_dense(std::size_t n, double p, std::uint64_t seed, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("run_dense: epsilon must be positive");
  DenseRun out;
  out.tree_order = dense_tree_order(n);
  out.step_budget = static_cast<std::size_t>(std::floor(epsilon * static_cast<double>(n) * static_cast<double>(n)));
  if (out.step_budget == 0) throw std::invalid_argument("run_dense: epsilon n^2 < 1 leaves no reveal budget");

  LazyRandomGraph g(n, p, seed);
  CounterRng rng(seed, 1);
  std::unique_ptr<TreeSource> trees;
  if (out.tree_order <= kExhaustiveTreeOrder) {
    trees = std::make_unique<ListTreeSource>(all_free_trees(out.tree_order, 3));
  } else {
    trees = std::make_unique<SampledMaxDeg3Source>(out.tree_order, CounterRng(seed, 2));
  }
  out.embed = greedy_embed(g, *trees, out.step_budget, rng);
  out.coloring = build_dense_coloring(out.embed, g.materialize());
  return out;
}

SparseBuild run_sparse(std::size_t n, double p, std::uint64_t seed, std::uint32_t k, double c_path) {
  const Graph g = gen_gnp(n, p, seed);
  SparseOptions opts;
  opts.c_path = c_path;
  opts.max_paths = static_cast<std::size_t>(std::floor(static_cast<double>(n) * p));
  return build_sparse(g, k, opts);
}

VerysparseBuild run_verysparse(std::size_t n, double p, std::uint64_t seed, std::uint64_t k, double safety) {
  return build_verysparse(gen_gnp(n, p, seed), p, k, safety);
}

namespace {

bool classes_distinct(const Coloring& c, nlohmann::json& diag) {
  try {
    const auto report = verify_distinct(c);
    if (report.offending) diag["offending"] = {report.offending->first, report.offending->second};
    return report.distinct;
  } catch (const std::domain_error& e) {
    diag["verify_error"] = e.what();
    return false;
  }
}

void validate(const TrialConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(cfg.p >= 0 && cfg.p <= 1)) throw std::invalid_argument("p must lie in [0, 1]");
  if (cfg.regime == Regime::kDense && cfg.n < 16) throw std::invalid_argument("dense regime needs n >= 16");
  if (cfg.regime == Regime::kSparse && cfg.n < 16) throw std::invalid_argument("sparse regime needs n >= 16");
  if (cfg.regime == Regime::kVerysparse && cfg.k < 2) throw std::invalid_argument("verysparse regime needs k >= 2");
}

}  // namespace

TrialRecord run_trial(const TrialConfig& cfg, std::uint64_t seed) {
  validate(cfg);
  TrialRecord rec;
  rec.seed = seed;
  rec.regime = cfg.regime;
  rec.n = cfg.n;
  rec.p = cfg.p;
  const double n = static_cast<double>(cfg.n);
  nlohmann::json& diag = rec.diagnostics;
  diag = nlohmann::json::object();

  const auto start = std::chrono::steady_clock::now();
  try {
    const Coloring* coloring = nullptr;
    bool bounded = true;
    DenseRun dense;
    SparseBuild sparse;
    VerysparseBuild very;
    switch (cfg.regime) {
      case Regime::kDense: {
        dense = run_dense(cfg.n, cfg.p, seed, cfg.epsilon);
        coloring = &dense.coloring;
        rec.upper_bound = upper_dense(n, cfg.p);
        const auto d = diagnostics_check(dense.embed.trace, cfg.epsilon, cfg.n, cfg.p);
        diag["trees"] = dense.embed.embedded.size();
        diag["tree_order"] = dense.tree_order;
        diag["steps"] = dense.embed.trace.steps;
        diag["stop"] = to_string(dense.embed.trace.stop);
        diag["max_rev"] = d.max_rev;
        diag["max_rev_active"] = d.max_rev_active;
        diag["max_rev_inactive"] = d.max_rev_inactive;
        diag["max_activations"] = d.max_activations;
        diag["thresholds_hold"] = d.thresholds_hold();
        break;
      }
      case Regime::kSparse: {
        const std::uint32_t k = cfg.k ? static_cast<std::uint32_t>(cfg.k) : sparse_k(cfg.n);
        sparse = run_sparse(cfg.n, cfg.p, seed, k, cfg.c_path);
        coloring = &sparse.coloring;
        rec.upper_bound = upper_dense(n, cfg.p);
        std::size_t shortest = sparse.paths.paths.empty() ? 0 : SIZE_MAX;
        for (const auto& path : sparse.paths.paths) shortest = std::min(shortest, path.size() - 1);
        diag["k"] = k;
        diag["paths"] = sparse.paths.paths.size();
        diag["shortest_path"] = shortest;
        diag["forests_placed"] = sparse.packing.placed.size();
        break;
      }
      case Regime::kVerysparse: {
        very = run_verysparse(cfg.n, cfg.p, seed, cfg.k, cfg.safety);
        coloring = &very.coloring;
        if (cfg.k >= 4) {
          rec.upper_bound = census_upper_bound(census(very.coloring.host), n, cfg.p, cfg.k);
        } else {
          rec.upper_bound = theta_verysparse(n, cfg.p, cfg.k);
          bounded = false;
        }
        diag["ell"] = very.ell;
        diag["supply"] = very.supply;
        diag["c"] = very.c;
        diag["xi"] = very.xi;
        diag["caps"] = very.caps;
        break;
      }
    }
    rec.classes = coloring->class_count();
    rec.ratio = rec.upper_bound > 0 ? static_cast<double>(rec.classes) / rec.upper_bound : 0;
    const bool partition = is_partition(*coloring);
    const bool distinct = classes_distinct(*coloring, diag);
    const bool within = !bounded || static_cast<double>(rec.classes) <= rec.upper_bound + 1;
    diag["partition"] = partition;
    diag["distinct"] = distinct;
    diag["within_bound"] = within;
    rec.ok = partition && distinct && within && rec.classes >= 1;
  } catch (const ConstructionError& e) {
    rec.error = e.what();
    rec.construction_failed = true;
    rec.ok = false;
  }
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<TrialRecord> run_experiment(const TrialConfig& cfg, std::uint64_t base_seed, std::size_t trials,
                                        std::size_t jobs) {
  validate(cfg);
  std::vector<TrialRecord> out(trials);
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(trials, 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < trials; ++i) out[i] = run_trial(cfg, trial_seed(base_seed, i));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (std::size_t i = next++; i < trials; i = next++) out[i] = run_trial(cfg, trial_seed(base_seed, i));
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records, bool timing) {
  out << "seed,regime,n,p,classes,upper_bound,ratio,ok,millis\n";
  for (const auto& r : records) {
    char millis[32];
    std::snprintf(millis, sizeof millis, "%.3f", timing ? r.millis : 0.0);
    out << r.seed << ',' << to_string(r.regime) << ',' << r.n << ',' << fmt_double(r.p) << ',' << r.classes << ','
        << fmt_double(r.upper_bound) << ',' << fmt_double(r.ratio) << ',' << (r.ok ? "true" : "false") << ','
        << millis << '\n';
  }
}

namespace {

nlohmann::json spread(std::vector<double> v) {
  if (v.empty()) return nullptr;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  const double median = v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
  return {{"min", v.front()}, {"median", median}, {"max", v.back()}};
}

}  // namespace

nlohmann::json experiment_summary(const TrialConfig& cfg, std::uint64_t base_seed,
                                  std::span<const TrialRecord> records) {
  using nlohmann::json;
  std::vector<double> classes, ratios;
  bool all_ok = !records.empty();
  json trials = json::array();
  for (const auto& r : records) {
    classes.push_back(static_cast<double>(r.classes));
    ratios.push_back(r.ratio);
    all_ok = all_ok && r.ok;
    json t = {{"seed", r.seed}, {"classes", r.classes}, {"ok", r.ok}, {"diagnostics", r.diagnostics}};
    if (!r.error.empty()) t["error"] = r.error;
    trials.push_back(std::move(t));
  }
  return json{
      {"format", "taulab-experiment"},
      {"version", kTrialCsvVersion},
      {"config",
       {{"regime", to_string(cfg.regime)},
        {"n", cfg.n},
        {"p", cfg.p},
        {"k", cfg.k},
        {"epsilon", cfg.epsilon},
        {"c_path", cfg.c_path},
        {"safety", cfg.safety},
        {"seed", base_seed},
        {"trials", records.size()}}},
      {"classes", spread(std::move(classes))},
      {"ratio", spread(std::move(ratios))},
      {"all_ok", all_ok},
      {"trials", std::move(trials)},
  };
}

}  // namespace taulab
