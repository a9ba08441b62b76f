#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "taulab/experiment.hpp"

using namespace taulab;

namespace {

std::string csv(const std::vector<TrialRecord>& r) {
  std::ostringstream out;
  write_trials_csv(out, r, false);
  return out.str();
}

}  // namespace

TEST_CASE("regime names") {
  for (Regime r : {Regime::kDense, Regime::kSparse, Regime::kVerysparse}) CHECK(parse_regime(to_string(r)) == r);
  CHECK_FALSE(parse_regime("medium"));
}

TEST_CASE("trials are reproducible and independent of thread count") {
  TrialConfig cfg;
  cfg.regime = Regime::kSparse;
  cfg.n = 1500;
  cfg.p = 20.0 / 1500;
  const auto a = run_experiment(cfg, 5, 4, 1);
  const auto b = run_experiment(cfg, 5, 4, 3);
  CHECK(csv(a) == csv(b));
  CHECK(experiment_summary(cfg, 5, a).dump() == experiment_summary(cfg, 5, b).dump());
  CHECK(csv(a) != csv(run_experiment(cfg, 6, 4, 1)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == trial_seed(5, i));
    CHECK(a[i].ok);
    CHECK(a[i].classes >= 1);
  }
}

TEST_CASE("csv layout") {
  TrialConfig cfg;
  cfg.regime = Regime::kDense;
  cfg.n = 200;
  cfg.p = 0.2;
  const auto r = run_experiment(cfg, 1, 2);
  const std::string text = csv(r);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "seed,regime,n,p,classes,upper_bound,ratio,ok,millis");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.find(",dense,200,0.20000000000000001,") != std::string::npos);
    CHECK(line.substr(line.size() - 11) == ",true,0.000");
  }
  CHECK(rows == 2);
}

TEST_CASE("summary statistics") {
  TrialConfig cfg;
  cfg.regime = Regime::kVerysparse;
  cfg.n = 20000;
  cfg.p = std::pow(20000.0, -1.3);
  cfg.k = 4;
  const auto r = run_experiment(cfg, 2, 3, 2);
  const auto j = experiment_summary(cfg, 2, r);
  CHECK(j["format"] == "taulab-experiment");
  CHECK(j["all_ok"] == true);
  CHECK(j["trials"].size() == 3);
  std::vector<double> classes;
  for (const auto& t : r) classes.push_back(static_cast<double>(t.classes));
  std::sort(classes.begin(), classes.end());
  CHECK(j["classes"]["min"] == classes[0]);
  CHECK(j["classes"]["median"] == classes[1]);
  CHECK(j["classes"]["max"] == classes[2]);
  CHECK(j["trials"][0]["diagnostics"]["ell"] == 3);
}

TEST_CASE("construction failures are recorded, bad configurations rejected") {
  TrialConfig cfg;
  cfg.regime = Regime::kVerysparse;
  cfg.n = 200;
  cfg.p = 1e-5;
  cfg.k = 4;
  const auto r = run_trial(cfg, 1);
  CHECK(r.construction_failed);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.error.empty());

  cfg.k = 0;
  CHECK_THROWS_AS(run_trial(cfg, 1), std::invalid_argument);
  TrialConfig dense;
  dense.n = 8;
  dense.p = 0.5;
  CHECK_THROWS_AS(run_trial(dense, 1), std::invalid_argument);
}
