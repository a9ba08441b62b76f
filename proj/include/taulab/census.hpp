#pragma once

#include <cstddef>
#include <map>

#include "taulab/canonical.hpp"
#include "taulab/graph.hpp"

namespace taulab {

/// One isomorphism class of connected components and its multiplicity.
struct ComponentClass {
  std::size_t order = 0;  // vertices
  std::size_t size = 0;   // edges
  bool is_tree = false;
  bool is_path = false;
  std::size_t count = 0;
};

/// Components of a graph grouped by canonical code. Isolated vertices are
/// listed under the single-vertex tree code but are not counted as paths.
/// Cyclic components above kGeneralComponentCap vertices fall back to an
/// invariant 'X' code, so two of them sharing a key are not necessarily
/// isomorphic.
struct ComponentCensus {
  std::map<CanonicalCode, ComponentClass> counts;
  /// order i (>= 2) -> number of components that are paths on i vertices
  std::map<std::size_t, std::size_t> path_counts;

  [[nodiscard]] std::size_t total_vertices() const;
  [[nodiscard]] std::size_t component_count() const;
  /// Number of tree components on `order` vertices, of any shape.
  [[nodiscard]] std::size_t tree_count(std::size_t order) const;
  [[nodiscard]] std::size_t path_count(std::size_t order) const;
};

ComponentCensus census(const Graph& g);

}  // namespace taulab
