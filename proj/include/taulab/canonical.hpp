#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "taulab/graph.hpp"

namespace taulab {

/// Isomorphism-invariant encoding of a graph. The first byte tags the kind:
///
///   'T'  tree, AHU parenthesis string rooted at the center
///   'G'  small connected graph, canonical adjacency bits
///   'M'  multiset of component codes (a whole class or forest)
///   'L'  linear forest given by its path lengths
///   'X'  large cyclic component; invariant only, not complete
///
/// Two codes of kind T, G, M or L are equal iff the encoded graphs are
/// isomorphic. All codes are printable ASCII without whitespace.
struct CanonicalCode {
  std::string bytes;

  [[nodiscard]] char kind() const noexcept { return bytes.empty() ? '\0' : bytes.front(); }
  [[nodiscard]] bool is_complete() const noexcept { return kind() != 'X'; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};

/// Rooted AHU string of a tree (no tag byte): "(" + sorted child strings + ")".
/// Iterative, so deep trees are fine.
std::string rooted_ahu(const Graph& tree, Vertex root);

/// Canonical code of an unrooted tree, rooted at its center (the smaller
/// of the two rootings when there are two centers).
/// Throws std::invalid_argument if `tree` is not connected and acyclic.
CanonicalCode ahu_code(const Graph& tree);

/// Default vertex cap for canonicalizing a cyclic component exactly.
inline constexpr std::size_t kGeneralComponentCap = 12;

/// Code of a connected component: AHU when it is a tree, the small-graph
/// canonical form when it has at most `cap` vertices, otherwise throws
/// std::domain_error.
CanonicalCode component_code(const Graph& connected, std::size_t cap = kGeneralComponentCap);

/// Code of an arbitrary graph with isolated vertices ignored: the sorted
/// multiset of its component codes. Throws std::domain_error when a cyclic
/// component exceeds `cap` vertices.
CanonicalCode graph_code(const Graph& g, std::size_t cap = kGeneralComponentCap);

/// Isomorphism-invariant (not complete) code for large cyclic components:
/// order, size and degree histogram.
CanonicalCode invariant_code(const Graph& connected);

}  // namespace taulab
