#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "taulab/bigint.hpp"
#include "taulab/canonical.hpp"
#include "taulab/graph.hpp"

namespace taulab {

/// Vertex-disjoint union of paths, given by the edge count of each path in
/// non-increasing order. A partition of k is the forest with sum(lengths) = k.
struct LinearForest {
  std::vector<std::uint32_t> path_lengths;

  /// Sum of path lengths (= edge count).
  [[nodiscard]] std::size_t parameter() const noexcept;
  [[nodiscard]] std::size_t path_count() const noexcept { return path_lengths.size(); }
  /// Edges plus paths: every path of length x has x + 1 vertices.
  [[nodiscard]] std::size_t vertex_count() const noexcept { return parameter() + path_count(); }

  friend bool operator==(const LinearForest&, const LinearForest&) = default;
};

/// Yields the partitions of k in reverse-lexicographic order, starting at
/// [k] and ending at [1, 1, ..., 1]. Holds O(k) state.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(std::uint32_t k);
  std::optional<LinearForest> next();

 private:
  std::vector<std::uint32_t> current_;
  bool done_ = false;
  bool started_ = false;
};

/// All partitions of k (k >= 1) in reverse-lexicographic order.
std::vector<LinearForest> partitions(std::uint32_t k);

/// p(0), p(1), ..., p(k) from Euler's pentagonal-number recurrence.
std::vector<BigInt> partition_counts(std::uint32_t k);

/// p(k) for k >= 1.
BigInt partition_count(std::uint32_t k);

/// "L" followed by the lengths sorted in non-increasing order; the input
/// order does not matter.
CanonicalCode forest_code(const LinearForest& f);

/// The forest as a graph: each path laid out on consecutive vertex labels.
Graph realize(const LinearForest& f);

}  // namespace taulab
