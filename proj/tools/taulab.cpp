// Command-line front end: graph generation, constructions, oracles, bounds
// and the seeded trial harness. Run `taulab --help` for the subcommands.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "taulab/bounds.hpp"
#include "taulab/builders.hpp"
#include "taulab/census.hpp"
#include "taulab/coloring_io.hpp"
#include "taulab/embed_report.hpp"
#include "taulab/errors.hpp"
#include "taulab/experiment.hpp"
#include "taulab/graph_io.hpp"
#include "taulab/lazy_random_graph.hpp"
#include "taulab/path_pack.hpp"

using namespace taulab;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConstruction = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DensityFlags {
  std::optional<double> p;
  std::optional<double> p_over_n;
  std::optional<double> p_log_over_n;
  std::optional<double> p_exponent;

  void add(CLI::App* app) {
    auto* a = app->add_option("--p", p, "edge probability");
    auto* b = app->add_option("--p-over-n", p_over_n, "p = x / n");
    auto* c = app->add_option("--p-log-over-n", p_log_over_n, "p = x ln n / n");
    auto* d = app->add_option("--p-exponent", p_exponent, "p = n^-x");
    a->excludes(b, c, d);
    b->excludes(c, d);
    c->excludes(d);
  }

  [[nodiscard]] bool given() const { return p || p_over_n || p_log_over_n || p_exponent; }

  double resolve(std::size_t n) const {
    const double nd = static_cast<double>(n);
    double out;
    if (p) out = *p;
    else if (p_over_n) out = *p_over_n / nd;
    else if (p_log_over_n) out = *p_log_over_n * std::log(nd) / nd;
    else if (p_exponent) out = std::pow(nd, -*p_exponent);
    else throw UsageError("one of --p, --p-over-n, --p-log-over-n, --p-exponent is required");
    if (!(out >= 0 && out <= 1)) throw UsageError("resolved p = " + std::to_string(out) + " is outside [0, 1]");
    return out;
  }
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Writes to `path`, or to stdout when it is empty or "-".
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
}

void check_window(std::size_t n, double p, std::uint64_t k, bool force) {
  const auto [lo, hi] = verysparse_window(static_cast<double>(n), k);
  if (p > lo && p < hi) return;
  std::cerr << "warning: p = " << fmt(p) << " is outside (" << fmt(lo) << ", " << fmt(hi)
            << "), the range where the very sparse analysis applies for k = " << k << '\n';
  if (!force) throw UsageError("pass --force to run anyway");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"taulab: non-isomorphic edge colorings of random graphs"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::uint64_t k = 0;
  double epsilon = kDeskEpsilon;
  double c_path = 0.05;
  double safety = 0.5;
  std::string in_path;
  std::string out_path;
  DensityFlags density;

  auto* gen = app.add_subcommand("gen", "write a G(n, p) edge list");
  gen->add_option("--n", n, "vertices")->required();
  density.add(gen);
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--out", out_path, "output file (default stdout)");

  auto* cen = app.add_subcommand("census", "component census of an edge list");
  cen->add_option("--in", in_path, "edge list")->required()->check(CLI::ExistingFile);

  auto* emb = app.add_subcommand("embed", "greedy tree embedding into a lazily revealed G(n, p)");
  emb->add_option("--n", n, "vertices")->required();
  density.add(emb);
  emb->add_option("--seed", seed, "seed");
  emb->add_option("--epsilon", epsilon, "reveal budget is floor(epsilon n^2)");
  emb->add_option("--out", out_path, "JSON report (default stdout)");

  std::optional<std::size_t> target_len;
  std::optional<std::size_t> max_paths;
  auto* pack = app.add_subcommand("pack-paths", "edge-disjoint long paths by depth-first search");
  pack->add_option("--in", in_path, "edge list")->required()->check(CLI::ExistingFile);
  pack->add_option("--c-path", c_path, "path length floor(c n)");
  pack->add_option("--length", target_len, "path length, overrides --c-path");
  pack->add_option("--max-paths", max_paths, "stop after this many paths (default: average degree)");
  pack->add_option("--out", out_path, "one path per line (default stdout)");

  std::string regime_text;
  bool force = false;
  auto* color = app.add_subcommand("color", "build a coloring of G(n, p) or of an edge list");
  color->add_option("--regime", regime_text, "dense | sparse | verysparse")->required();
  color->add_option("--in", in_path, "edge list (sparse and verysparse only)")->check(CLI::ExistingFile);
  color->add_option("--n", n, "vertices");
  density.add(color);
  color->add_option("--k", k, "forest parameter (sparse) or regime parameter (verysparse)");
  color->add_option("--seed", seed, "seed");
  color->add_option("--epsilon", epsilon, "dense reveal budget factor");
  color->add_option("--c-path", c_path, "sparse path length factor");
  color->add_option("--safety", safety, "verysparse safety factor in (0, 1]");
  color->add_option("--out", out_path, "coloring file");
  color->add_flag("--force", force, "run even when p is outside the regime's range");

  auto* tau = app.add_subcommand("tau-exact", "exact tau of a graph with at most 8 edges");
  tau->add_option("--in", in_path, "edge list")->required()->check(CLI::ExistingFile);

  std::optional<std::size_t> bn;
  auto* bnd = app.add_subcommand("bounds", "closed-form quantities");
  bnd->add_option("--k", k, "regime parameter")->required()->check(CLI::Range(2, 1 << 30));
  bnd->add_option("--n", bn, "vertices, to evaluate the magnitudes");
  density.add(bnd);

  std::size_t trials = 1;
  std::size_t jobs = 1;
  bool no_timing = false;
  auto* exp = app.add_subcommand("experiment", "seeded trials, CSV rows plus a JSON summary");
  exp->add_option("--regime", regime_text, "dense | sparse | verysparse")->required();
  exp->add_option("--n", n, "vertices")->required();
  density.add(exp);
  exp->add_option("--k", k, "forest or regime parameter");
  exp->add_option("--seed", seed, "base seed");
  exp->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  exp->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  exp->add_option("--epsilon", epsilon, "dense reveal budget factor");
  exp->add_option("--c-path", c_path, "sparse path length factor");
  exp->add_option("--safety", safety, "verysparse safety factor in (0, 1]");
  exp->add_option("--out", out_path, "writes <out>.csv and <out>.json (default: CSV to stdout)");
  exp->add_flag("--no-timing", no_timing, "write 0 in the millis column");
  exp->add_flag("--force", force, "run even when p is outside the regime's range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    auto need_regime = [&] {
      auto r = parse_regime(regime_text);
      if (!r) throw UsageError("unknown regime '" + regime_text + "'");
      return *r;
    };

    if (gen->parsed()) {
      const Graph g = gen_gnp(n, density.resolve(n), seed);
      emit(out_path, [&](std::ostream& o) { write_edgelist(o, g); });
    } else if (cen->parsed()) {
      const Graph g = read_edgelist(in_path);
      const auto c = census(g);
      std::cout << "vertices " << g.order() << " edges " << g.size() << " components " << c.component_count()
                << '\n';
      for (const auto& [order, count] : c.path_counts) std::cout << "path " << order << ' ' << count << '\n';
      for (const auto& [code, cls] : c.counts) {
        std::cout << "class " << cls.order << ' ' << cls.size << ' ' << cls.count << ' ' << code.bytes << '\n';
      }
    } else if (emb->parsed()) {
      const double p = density.resolve(n);
      const DenseRun run = run_dense(n, p, seed, epsilon);
      const EmbedRunInfo info{n, p, seed, epsilon, run.step_budget, run.tree_order};
      emit(out_path, [&](std::ostream& o) { write_embed_report(o, run.embed, info); });
    } else if (pack->parsed()) {
      const Graph g = read_edgelist(in_path);
      if (g.order() == 0) throw UsageError("empty graph");
      const std::size_t len = target_len.value_or(static_cast<std::size_t>(std::floor(c_path * g.order())));
      const std::size_t cap = max_paths.value_or(2 * g.size() / g.order());
      const PathPack pp = dfs_path_pack(g, len, cap);
      emit(out_path, [&](std::ostream& o) {
        for (const auto& path : pp.paths) {
          for (std::size_t i = 0; i < path.size(); ++i) o << (i ? " " : "") << path[i];
          o << '\n';
        }
      });
      std::cerr << "paths " << pp.paths.size() << " length " << len << '\n';
    } else if (color->parsed()) {
      const Regime regime = need_regime();
      Coloring c;
      if (regime == Regime::kDense) {
        if (!in_path.empty()) throw UsageError("dense coloring reveals its own graph; --in is not accepted");
        if (n == 0) throw UsageError("--n is required");
        c = run_dense(n, density.resolve(n), seed, epsilon).coloring;
      } else {
        Graph g;
        double p = 0;
        if (!in_path.empty()) {
          g = read_edgelist(in_path);
          if (density.given()) p = density.resolve(g.order());
        } else {
          if (n == 0) throw UsageError("--n or --in is required");
          p = density.resolve(n);
          g = gen_gnp(n, p, seed);
        }
        if (regime == Regime::kSparse) {
          SparseOptions opts;
          opts.c_path = c_path;
          if (p > 0) opts.max_paths = static_cast<std::size_t>(std::floor(p * g.order()));
          c = build_sparse(g, k ? static_cast<std::uint32_t>(k) : sparse_k(g.order()), opts).coloring;
        } else {
          if (k < 2) throw UsageError("--k >= 2 is required for the verysparse regime");
          if (!(p > 0)) throw UsageError("the verysparse regime needs p");
          check_window(g.order(), p, k, force);
          c = build_verysparse(g, p, k, safety).coloring;
        }
      }
      const auto report = verify_distinct(c);
      std::cout << "classes " << c.class_count() << " distinct " << (report.distinct ? "true" : "false") << '\n';
      if (!out_path.empty()) write_coloring(out_path, c);
      if (!report.distinct) return kExitConstruction;
    } else if (tau->parsed()) {
      std::cout << tau_exact(read_edgelist(in_path)) << '\n';
    } else if (bnd->parsed()) {
      const auto e = theta_exponents(k);
      std::cout << "k " << k << '\n';
      std::cout << "ell " << ell(k) << '\n';
      std::cout << "claim " << (claim_check(k) ? "true" : "false") << '\n';
      std::cout << "theta_exponents n " << fmt(e.n_exp) << " p " << fmt(e.p_exp) << '\n';
      if (bn) {
        const double nd = static_cast<double>(*bn);
        const auto [lo, hi] = verysparse_window(nd, k);
        std::cout << "window " << fmt(lo) << ' ' << fmt(hi) << '\n';
        if (density.given()) {
          const double p = density.resolve(*bn);
          std::cout << "p " << fmt(p) << '\n';
          std::cout << "theta " << fmt(theta_verysparse(nd, p, k)) << '\n';
          if (nd >= 16) std::cout << "upper_dense " << fmt(upper_dense(nd, p)) << '\n';
        }
      }
    } else if (exp->parsed()) {
      TrialConfig cfg;
      cfg.regime = need_regime();
      cfg.n = n;
      cfg.p = density.resolve(n);
      cfg.k = k;
      cfg.epsilon = epsilon;
      cfg.c_path = c_path;
      cfg.safety = safety;
      if (cfg.regime == Regime::kVerysparse) {
        if (k < 2) throw UsageError("--k >= 2 is required for the verysparse regime");
        check_window(n, cfg.p, k, force);
      }
      const auto records = run_experiment(cfg, seed, trials, jobs);
      if (out_path.empty()) {
        write_trials_csv(std::cout, records, !no_timing);
      } else {
        emit(out_path + ".csv", [&](std::ostream& o) { write_trials_csv(o, records, !no_timing); });
        emit(out_path + ".json", [&](std::ostream& o) { o << experiment_summary(cfg, seed, records).dump(2) << '\n'; });
      }
      for (const auto& r : records) {
        if (r.construction_failed) {
          std::cerr << "trial seed " << r.seed << ": " << r.error << '\n';
          return kExitConstruction;
        }
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kExitConstruction;
  } catch (const ParseError& e) {
    std::cerr << "error: " << in_path << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConstruction;
  }
  return 0;
}
