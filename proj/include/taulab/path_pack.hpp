#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "taulab/graph.hpp"
#include "taulab/partitions.hpp"

namespace taulab {

/// Edge-disjoint simple paths of a host graph.
struct PathPack {
  /// Vertex sequences; a path of length L has L + 1 vertices.
  std::vector<std::vector<Vertex>> paths;
  /// Edge keys (see edge_key) of all path edges.
  std::vector<std::uint64_t> used_edges;

  [[nodiscard]] std::size_t total_vertices() const noexcept;
};

/// Extracts paths of exactly `target_len` edges one at a time. Each search
/// is a DFS on the host minus edges of earlier paths: extend the current
/// path to an unvisited vertex while possible, otherwise retire the endpoint
/// and back up; when the path shrinks to nothing, restart at the
/// lowest-index unvisited vertex. A path is taken as soon as it reaches
/// `target_len`. Stops after `max_paths` paths or when a full search finds
/// none. Throws std::invalid_argument for target_len == 0, and
/// std::logic_error if the result fails its own disjointness check.
PathPack dfs_path_pack(const Graph& g, std::size_t target_len, std::size_t max_paths);

/// Checks simplicity, host membership and edge-disjointness of every path.
bool verify_path_pack(const Graph& g, const PathPack& pack);

struct ForestPlacement {
  std::size_t forest_index = 0;
  std::size_t path_index = 0;
  /// Position on the path of the forest's first vertex.
  std::size_t vertex_offset = 0;
  std::vector<Edge> edges;
};

struct PackedForests {
  std::vector<ForestPlacement> placed;
  std::vector<std::size_t> unplaced;
};

/// Lays the forests along the paths in order. A forest with path lengths
/// x_1..x_l occupies x_1 + 1, ..., x_l + 1 consecutive path vertices; the
/// path edge between two consecutive pieces is left out, so the pieces are
/// vertex-disjoint. The next forest starts at the following vertex. A forest
/// that does not fit on the rest of the current path moves to the next path;
/// one that does not fit there either is reported as unplaced and the
/// position is kept. Throws std::invalid_argument for a forest with no paths
/// or a zero-length piece.
PackedForests pack_forests(const PathPack& paths, std::span<const LinearForest> forests);

}  // namespace taulab
