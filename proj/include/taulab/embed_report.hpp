#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>

#include <json.hpp>

#include "taulab/greedy_embed.hpp"

namespace taulab {

inline constexpr int kEmbedReportVersion = 1;

struct EmbedRunInfo {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  double epsilon = kDeskEpsilon;
  std::size_t step_budget = 0;
  std::size_t tree_order = 0;
};

/// JSON report of an embedding run:
///
///   {
///     "format": "taulab-embed", "version": 1,
///     "run":   {n, p, seed, epsilon, step_budget, tree_order},
///     "trace": {steps, stop, failed, failure_step|null, sum_rev,
///               sum_rev_active, sum_rev_inactive, max_rev, max_rev_active,
///               max_rev_inactive, max_activations, thresholds_hold},
///     "trees": [{code, mapping: [..], edges: [[u, v], ..],
///                first_step, last_step}, ..]
///   }
///
/// The per-reveal history is not included.
nlohmann::json embed_report(const EmbedResult& result, const EmbedRunInfo& info);

void write_embed_report(std::ostream& out, const EmbedResult& result, const EmbedRunInfo& info);

}  // namespace taulab
