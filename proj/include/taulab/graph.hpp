#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace taulab {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the pair so that u < v. Throws std::invalid_argument on a == b.
Edge make_edge(Vertex a, Vertex b);

constexpr std::uint64_t edge_key(Edge e) noexcept {
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted; adjacency is a CSR array with sorted neighbor
/// lists, each neighbor paired with the index of the connecting edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Validates: endpoints < n, no self-loops, no duplicates.
  Graph(std::size_t n, std::vector<Edge> edges);

  [[nodiscard]] std::size_t order() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  /// Edge indices parallel to neighbors(v).
  [[nodiscard]] std::span<const std::uint32_t> incident_edges(Vertex v) const noexcept {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  [[nodiscard]] std::size_t max_degree() const noexcept;

  [[nodiscard]] bool has_edge(Vertex a, Vertex b) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<std::uint32_t> edge_ids_;
};

/// Vertex sets of the connected components, each sorted, ordered by
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// The subgraph spanned by `edges`, relabeled onto 0..k-1 where k is the
/// number of distinct endpoints (isolated vertices are dropped).
Graph edge_subgraph(std::span<const Edge> edges);

/// The subgraph induced on `vertices`, relabeled in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// G(n, p) with each pair present independently with probability p. Uses
/// geometric skipping over the pair sequence, so the cost is O(n + |E|).
/// Bit-reproducible for a fixed seed. Throws std::invalid_argument when p is
/// outside [0, 1] or n is zero.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace taulab
