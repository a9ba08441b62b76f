#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "taulab/canonical.hpp"
#include "taulab/graph.hpp"
#include "taulab/lazy_random_graph.hpp"
#include "taulab/rng.hpp"
#include "taulab/tree_families.hpp"

namespace taulab {

/// Constants used by the density-regime proof. Desk-scale runs default to
/// kDeskEpsilon instead.
inline constexpr double kProofEpsilon = 1.0 / 10000.0;
inline constexpr double kProofC = 4.0 / kProofEpsilon;
inline constexpr double kDeskEpsilon = 0.01;

enum class EmbedStop { kBudget, kSupplyExhausted, kFailure };

const char* to_string(EmbedStop stop) noexcept;

/// Per-vertex reveal bookkeeping of one embedding run.
///
/// rev(v) counts revealed pairs at v; rev_active(v) those revealed while v
/// was the active vertex and rev_inactive(v) the rest, so
/// rev = rev_active + rev_inactive and sum(rev) = 2 * steps.
struct EmbedTrace {
  struct Counters {
    std::vector<std::uint32_t> rev;
    std::vector<std::uint32_t> rev_active;
    std::vector<std::uint32_t> rev_inactive;
  };
  struct Span {
    std::size_t first_step = 0;  // 1-based step of the tree's first reveal
    std::size_t last_step = 0;
  };

  std::size_t steps = 0;
  Counters counters;
  /// Number of times each vertex became the active vertex.
  std::vector<std::uint32_t> activations;
  /// One span per embedded tree, parallel to EmbedResult::embedded.
  std::vector<Span> tree_spans;
  EmbedStop stop = EmbedStop::kBudget;
  bool failed = false;
  std::optional<std::size_t> failure_step;
  /// Every reveal in order; initiator is the active vertex.
  std::vector<RevealRecord> history;

  /// Counters after the first `step` reveals, recomputed from history.
  [[nodiscard]] Counters counters_at(std::size_t step) const;
};

struct EmbeddedTree {
  CanonicalCode code;
  /// mapping[i] is the host vertex of tree vertex i.
  std::vector<Vertex> mapping;
  /// Host edges, images of the tree edges.
  std::vector<Edge> edges;
};

struct EmbedResult {
  std::vector<EmbeddedTree> embedded;
  EmbedTrace trace;
};

/// Embeds trees from `trees` one by one into `g`, revealing pairs at the
/// active vertex until an edge is found for the next tree vertex.
///
/// Tree vertices are processed in BFS order from tree vertex 0, so every
/// vertex after the first has exactly one embedded neighbour; its image is
/// the active vertex. A tree's first image is uniform over V(G). Partners
/// are drawn uniformly among vertices whose pair with the active vertex is
/// unrevealed and that are not yet used by the current tree. Host vertices
/// may be reused by different trees; pairs are never reused.
///
/// Stops after `step_budget` reveals, when `trees` runs dry, or when the
/// active vertex has no admissible partner left (recorded as a failure). A
/// partially embedded tree at the stop is discarded.
///
/// Throws std::invalid_argument for a zero budget or a supplied tree of
/// order < 2 or max degree > 3.
EmbedResult greedy_embed(LazyRandomGraph& g, TreeSource& trees, std::size_t step_budget,
                         CounterRng& rng);

struct DiagnosticsReport {
  std::size_t max_rev = 0;
  std::size_t max_rev_active = 0;
  std::size_t max_rev_inactive = 0;
  std::size_t max_activations = 0;
  double rev_threshold = 0;         // 1000 * eps * n
  double half_threshold = 0;        // 500 * eps * n, for rev_active and rev_inactive
  double activation_threshold = 0;  // 3 * eps * n * p
  bool rev_ok = true;
  bool rev_active_ok = true;
  bool rev_inactive_ok = true;
  bool activations_ok = true;

  /// The three reveal thresholds; activations are reported separately.
  [[nodiscard]] bool thresholds_hold() const noexcept {
    return rev_ok && rev_active_ok && rev_inactive_ok;
  }
};

DiagnosticsReport diagnostics_check(const EmbedTrace& trace, double epsilon, std::size_t n, double p);

/// floor(3 * log2(n)), the tree order used by the dense construction.
std::size_t dense_tree_order(std::size_t n);

}  // namespace taulab
