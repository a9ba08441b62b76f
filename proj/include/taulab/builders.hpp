#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "taulab/census.hpp"
#include "taulab/coloring.hpp"
#include "taulab/greedy_embed.hpp"
#include "taulab/path_pack.hpp"

namespace taulab {

/// One class per embedded tree plus one class for every other edge of
/// `host`, which must contain all tree edges. Trees must be pairwise
/// non-isomorphic. A leftover that collides with a tree class is merged
/// (see attach_leftover). Throws std::logic_error if the result is not a
/// partition of E(host).
Coloring build_dense_coloring(const EmbedResult& result, const Graph& host);

/// ceil(ln^2 n), the forest parameter of the sparse construction.
std::uint32_t sparse_k(std::size_t n);

struct SparseOptions {
  /// Path length is floor(c_path * n) unless target_len is given.
  double c_path = 0.05;
  std::optional<std::size_t> target_len;
  /// Defaults to floor(2|E| / n), the average degree, as an estimate of np.
  std::optional<std::size_t> max_paths;
};

struct SparseBuild {
  Coloring coloring;
  PathPack paths;
  PackedForests packing;
  /// Forests offered to the packer, in generation order.
  std::vector<LinearForest> forests;
};

/// Packs edge-disjoint paths, lays linear forests (partitions of k, in
/// reverse-lexicographic order) along them and colors each placed forest
/// with its own class; all other edges form one leftover class. With no
/// path found the whole edge set is one class. Throws std::invalid_argument
/// for k < 2 or an empty graph.
SparseBuild build_sparse(const Graph& g, std::uint32_t k, const SparseOptions& opts = {});

/// One class per nonzero vector (t_2, ..., t_l) with 0 <= t_i <= caps[i-2],
/// realized by t_i isolated path components of order i taken from g; the
/// remaining edges form one leftover class. Throws ConstructionError when
/// all caps are zero or g lacks the components to realize the box.
Coloring build_census_coloring(const Graph& g, std::span<const std::uint32_t> caps);

/// Number of isolated P_i components the box with these caps consumes:
/// entry i-2 is (caps_i (caps_i + 1) / 2) * prod_{j != i} (caps_j + 1).
std::vector<std::uint64_t> census_box_demand(std::span<const std::uint32_t> caps);

struct VerysparseBuild {
  Coloring coloring;
  std::uint32_t ell = 0;
  /// Entries for i = 2..l.
  std::vector<std::size_t> supply;  // isolated P_i components in g
  std::vector<double> c;
  std::vector<double> xi;
  std::vector<std::uint32_t> caps;  // after clamping to supply
};

/// Very sparse construction with l = ell(k): c_i = safety * N_i / (n^i p^{i-1})
/// from the observed isolated-path counts N_i, caps floor(xi_i) clamped so
/// the box can be realized from the supply, then build_census_coloring.
/// Throws std::invalid_argument for k < 2 or safety outside (0, 1], and
/// ConstructionError when every cap is zero.
VerysparseBuild build_verysparse(const Graph& g, double p, std::uint64_t k, double safety = 0.5);

/// upper_F with A_i = number of tree components of order i + 1 and
/// B = 2 * (number of tree components of order l). Requires k >= 4.
double census_upper_bound(const ComponentCensus& c, double n, double p, std::uint64_t k);

}  // namespace taulab
