#pragma once

// Independent reference implementations used only by the tests. Nothing
// here shares code with the library beyond the Graph container.

#include <cstdint>
#include <vector>

#include "taulab/graph.hpp"
#include "taulab/rng.hpp"

namespace oracle {

using taulab::Edge;
using taulab::Graph;
using taulab::Vertex;

/// Backtracking search for an adjacency-preserving bijection.
bool isomorphic(const Graph& a, const Graph& b);

/// Isomorphism of the graphs spanned by two edge sets (isolated vertices ignored).
bool isomorphic_edges(const std::vector<Edge>& a, const std::vector<Edge>& b);

/// Every labeled tree on n >= 1 vertices, decoded from all Pruefer sequences.
std::vector<Graph> labeled_trees(std::size_t n);

/// Largest count of pairwise non-isomorphic parts over all set partitions of
/// E(g), by plain recursion without pruning.
std::size_t tau_brute(const Graph& g);

/// Each pair independently with probability p, one coin per pair in order.
Graph coin_graph(std::size_t n, double p, taulab::CounterRng& rng);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph complete(std::size_t n);
Graph matching(std::size_t m);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Exact mean and variance of the number of components that are paths on
/// i vertices (i = 2 or 3) in G(n, p).
struct Moments {
  double mean;
  double variance;
};
Moments isolated_path_moments(std::size_t n, double p, std::size_t i);

}  // namespace oracle
