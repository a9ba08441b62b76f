#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "taulab/bigint.hpp"
#include "taulab/graph.hpp"
#include "taulab/rng.hpp"

namespace taulab {

/// A rooted binary tree: every node has an optional left and an optional
/// right child, and the two slots are distinguished. Nodes are stored in
/// preorder with the root at index 0.
class RootedBinaryTree {
 public:
  static constexpr std::int32_t kNoChild = -1;

  struct Node {
    std::int32_t left = kNoChild;
    std::int32_t right = kNoChild;
    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  RootedBinaryTree() = default;
  explicit RootedBinaryTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }

  /// Underlying unrooted tree; vertex i is node i. Max degree is at most 3.
  [[nodiscard]] Graph to_graph() const;

  friend bool operator==(const RootedBinaryTree&, const RootedBinaryTree&) = default;
  friend auto operator<=>(const RootedBinaryTree&, const RootedBinaryTree&) = default;

 private:
  std::vector<Node> nodes_;
};

/// C(2t, t) / (t + 1), exactly. Requires t >= 1.
BigInt catalan(std::uint64_t t);

/// Full enumeration is refused above this order.
inline constexpr std::size_t kRootedBinaryEnumerationCap = 16;

/// Calls `visit` once per rooted binary tree on t nodes. The tree passed is
/// only valid for the duration of the call. Throws std::invalid_argument for
/// t == 0 or t above the cap.
void for_each_rooted_binary(std::size_t t, const std::function<void(const RootedBinaryTree&)>& visit);

std::vector<RootedBinaryTree> enumerate_rooted_binary(std::size_t t);

/// The tree of the given rank in [0, catalan(t)), ordering by left subtree
/// size first.
RootedBinaryTree unrank_rooted_binary(std::size_t t, BigInt rank);

/// Uniformly random rooted binary tree on t >= 1 nodes.
RootedBinaryTree sample_rooted_binary(std::size_t t, CounterRng& rng);

}  // namespace taulab
