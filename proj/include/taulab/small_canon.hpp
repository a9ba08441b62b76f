#pragma once

#include <cstddef>
#include <string>

#include "taulab/graph.hpp"

namespace taulab {

/// Largest vertex count accepted by the small-graph canonicalizer.
inline constexpr std::size_t kSmallCanonMaxVertices = 16;

/// Canonical form of a small graph: "G<n>:" followed by the upper-triangle
/// adjacency bits under the lexicographically smallest labeling reachable by
/// colour refinement plus individualization. Twins inside a cell are not
/// branched on. Equal strings iff isomorphic graphs.
///
/// Throws std::domain_error above kSmallCanonMaxVertices.
std::string small_canonical_form(const Graph& g);

}  // namespace taulab
