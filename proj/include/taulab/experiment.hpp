#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "taulab/builders.hpp"
#include "taulab/coloring.hpp"
#include "taulab/greedy_embed.hpp"

namespace taulab {

enum class Regime { kDense, kSparse, kVerysparse };

const char* to_string(Regime r) noexcept;
std::optional<Regime> parse_regime(std::string_view text);

struct TrialConfig {
  Regime regime = Regime::kDense;
  std::size_t n = 0;
  double p = 0;
  /// Sparse: forest parameter, 0 picks sparse_k(n). Very sparse: required.
  std::uint64_t k = 0;
  double epsilon = kDeskEpsilon;
  double c_path = 0.05;
  double safety = 0.5;
};

struct DenseRun {
  EmbedResult embed;
  Coloring coloring;
  std::size_t tree_order = 0;
  std::size_t step_budget = 0;
};

/// G(n, p) revealed lazily from `seed`, trees of order dense_tree_order(n)
/// with max degree 3, budget floor(epsilon n^2) reveals.
DenseRun run_dense(std::size_t n, double p, std::uint64_t seed, double epsilon);

/// gen_gnp(n, p, seed), then build_sparse with at most floor(np) paths.
SparseBuild run_sparse(std::size_t n, double p, std::uint64_t seed, std::uint32_t k, double c_path);

/// gen_gnp(n, p, seed), then build_verysparse.
VerysparseBuild run_verysparse(std::size_t n, double p, std::uint64_t seed, std::uint64_t k, double safety);

struct TrialRecord {
  std::uint64_t seed = 0;
  Regime regime = Regime::kDense;
  std::size_t n = 0;
  double p = 0;
  std::size_t classes = 0;
  /// upper_dense for dense and sparse; census_upper_bound for very sparse
  /// with k >= 4, theta_verysparse (an order of magnitude) below that.
  double upper_bound = 0;
  double ratio = 0;  // classes / upper_bound
  /// Partition, pairwise distinct classes, and classes <= upper_bound + 1
  /// where upper_bound is a bound.
  bool ok = false;
  double millis = 0;
  nlohmann::json diagnostics;
  /// Set when the construction threw; the record is then not ok.
  std::string error;
  bool construction_failed = false;
};

/// Runs one trial with the given seed. Construction failures are caught and
/// recorded; invalid configurations throw std::invalid_argument.
TrialRecord run_trial(const TrialConfig& config, std::uint64_t seed);

/// Trial i uses trial_seed(base_seed, i). With jobs > 1 trials run on that
/// many threads; the result is ordered by trial index either way.
std::vector<TrialRecord> run_experiment(const TrialConfig& config, std::uint64_t base_seed,
                                        std::size_t trials, std::size_t jobs = 1);

/// Columns: seed,regime,n,p,classes,upper_bound,ratio,ok,millis. With
/// timing off millis is written as 0 so output is reproducible.
inline constexpr int kTrialCsvVersion = 1;
void write_trials_csv(std::ostream& out, std::span<const TrialRecord> records, bool timing = true);

/// Min/median/max of classes and ratio, all_ok and per-trial diagnostics.
nlohmann::json experiment_summary(const TrialConfig& config, std::uint64_t base_seed,
                                  std::span<const TrialRecord> records);

}  // namespace taulab
