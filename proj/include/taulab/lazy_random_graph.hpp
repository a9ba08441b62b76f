#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "taulab/graph.hpp"

namespace taulab {

/// One revealed pair. `initiator` is the first argument passed to reveal();
/// in the greedy embedding it is the active vertex.
struct RevealRecord {
  Vertex initiator = 0;
  Vertex other = 0;
  bool present = false;
};

/// G(n, p) whose pairs are decided on demand. The outcome of a pair is a
/// p-Bernoulli draw that depends only on (seed, pair), so the order of
/// reveals never changes which pairs are edges, and materialize() yields the
/// same graph the reveals were sampling from.
///
/// Single owner, not thread-safe.
class LazyRandomGraph {
 public:
  /// Throws std::invalid_argument when n < 2 or p is outside [0, 1].
  LazyRandomGraph(std::size_t n, double p, std::uint64_t seed);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] double probability() const noexcept { return p_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  /// Decides the pair. Throws std::invalid_argument for u == v or an
  /// out-of-range vertex, std::logic_error if the pair was already revealed.
  bool reveal(Vertex u, Vertex v);

  [[nodiscard]] bool is_revealed(Vertex u, Vertex v) const;
  /// Revealed and an edge.
  [[nodiscard]] bool is_present(Vertex u, Vertex v) const;
  /// rev(v): number of revealed pairs containing v.
  [[nodiscard]] std::size_t revealed_degree(Vertex v) const noexcept { return partners_[v].size(); }
  [[nodiscard]] const std::unordered_set<Vertex>& revealed_partners(Vertex v) const noexcept {
    return partners_[v];
  }
  [[nodiscard]] std::size_t reveal_count() const noexcept { return history_.size(); }
  [[nodiscard]] const std::vector<RevealRecord>& history() const noexcept { return history_; }
  [[nodiscard]] std::vector<Edge> present_edges() const;

  /// The fixed outcome of a pair, revealed or not. Does not record anything.
  [[nodiscard]] bool outcome(Vertex u, Vertex v) const noexcept;

  /// The full graph, evaluating every pair. O(n^2).
  [[nodiscard]] Graph materialize() const;

 private:
  std::size_t n_;
  double p_;
  std::uint64_t seed_;
  std::uint64_t key_;
  std::vector<std::unordered_set<Vertex>> partners_;
  std::vector<RevealRecord> history_;
};

}  // namespace taulab
