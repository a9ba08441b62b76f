#include "taulab/embed_report.hpp"

#include <numeric>
#include <ostream>

namespace taulab {

nlohmann::json embed_report(const EmbedResult& result, const EmbedRunInfo& info) {
  using nlohmann::json;
  const auto& trace = result.trace;
  const auto diag = diagnostics_check(trace, info.epsilon, info.n, info.p);
  auto sum = [](const std::vector<std::uint32_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
  };

  json trees = json::array();
  for (std::size_t i = 0; i < result.embedded.size(); ++i) {
    const auto& t = result.embedded[i];
    json edges = json::array();
    for (const Edge& e : t.edges) edges.push_back({e.u, e.v});
    trees.push_back({{"code", t.code.bytes},
                     {"mapping", t.mapping},
                     {"edges", std::move(edges)},
                     {"first_step", trace.tree_spans[i].first_step},
                     {"last_step", trace.tree_spans[i].last_step}});
  }

  return json{
      {"format", "taulab-embed"},
      {"version", kEmbedReportVersion},
      {"run",
       {{"n", info.n},
        {"p", info.p},
        {"seed", info.seed},
        {"epsilon", info.epsilon},
        {"step_budget", info.step_budget},
        {"tree_order", info.tree_order}}},
      {"trace",
       {{"steps", trace.steps},
        {"stop", to_string(trace.stop)},
        {"failed", trace.failed},
        {"failure_step", trace.failure_step ? json(*trace.failure_step) : json(nullptr)},
        {"sum_rev", sum(trace.counters.rev)},
        {"sum_rev_active", sum(trace.counters.rev_active)},
        {"sum_rev_inactive", sum(trace.counters.rev_inactive)},
        {"max_rev", diag.max_rev},
        {"max_rev_active", diag.max_rev_active},
        {"max_rev_inactive", diag.max_rev_inactive},
        {"max_activations", diag.max_activations},
        {"thresholds_hold", diag.thresholds_hold()}}},
      {"trees", std::move(trees)},
  };
}

void write_embed_report(std::ostream& out, const EmbedResult& result, const EmbedRunInfo& info) {
  out << embed_report(result, info).dump(2) << '\n';
}

}  // namespace taulab
