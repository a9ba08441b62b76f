#include "taulab/path_pack.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace taulab {

std::size_t PathPack::total_vertices() const noexcept {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.size();
  return total;
}

namespace {

// One DFS sweep over the residual graph. Every adjacency entry is scanned at
// most once per sweep since vertices never return to U.
std::optional<std::vector<Vertex>> find_path(const Graph& g, const std::vector<bool>& used,
                                             std::size_t target_len) {
  const std::size_t n = g.order();
  std::vector<bool> in_u(n, true);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> path;
  for (Vertex start = 0; start < n; ++start) {
    if (!in_u[start]) continue;
    in_u[start] = false;
    path.assign(1, start);
    while (!path.empty()) {
      const Vertex x = path.back();
      const auto nb = g.neighbors(x);
      const auto ids = g.incident_edges(x);
      bool extended = false;
      while (cursor[x] < nb.size()) {
        const std::size_t i = cursor[x]++;
        if (!used[ids[i]] && in_u[nb[i]]) {
          in_u[nb[i]] = false;
          path.push_back(nb[i]);
          extended = true;
          break;
        }
      }
      if (extended) {
        if (path.size() - 1 == target_len) return path;
      } else {
        path.pop_back();  // x moves to W
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PathPack dfs_path_pack(const Graph& g, std::size_t target_len, std::size_t max_paths) {
  if (target_len == 0) throw std::invalid_argument("dfs_path_pack: target_len must be positive");
  PathPack pack;
  std::vector<bool> used(g.size(), false);
  while (pack.paths.size() < max_paths) {
    auto path = find_path(g, used, target_len);
    if (!path) break;
    for (std::size_t i = 0; i + 1 < path->size(); ++i) {
      const Edge e = make_edge((*path)[i], (*path)[i + 1]);
      const auto nb = g.neighbors(e.u);
      const auto it = std::lower_bound(nb.begin(), nb.end(), e.v);
      used[g.incident_edges(e.u)[static_cast<std::size_t>(it - nb.begin())]] = true;
      pack.used_edges.push_back(edge_key(e));
    }
    pack.paths.push_back(std::move(*path));
  }
  if (!verify_path_pack(g, pack)) throw std::logic_error("dfs_path_pack: produced overlapping paths");
  return pack;
}

bool verify_path_pack(const Graph& g, const PathPack& pack) {
  std::unordered_set<std::uint64_t> seen_edges;
  for (const auto& path : pack.paths) {
    std::unordered_set<Vertex> seen_vertices;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= g.order() || !seen_vertices.insert(path[i]).second) return false;
      if (i + 1 < path.size()) {
        if (!g.has_edge(path[i], path[i + 1])) return false;
        if (!seen_edges.insert(edge_key(make_edge(path[i], path[i + 1]))).second) return false;
      }
    }
  }
  return true;
}

PackedForests pack_forests(const PathPack& paths, std::span<const LinearForest> forests) {
  PackedForests out;
  std::size_t path = 0;
  std::size_t offset = 0;
  for (std::size_t f = 0; f < forests.size(); ++f) {
    const LinearForest& forest = forests[f];
    if (forest.path_lengths.empty()) throw std::invalid_argument("pack_forests: forest has no paths");
    if (std::find(forest.path_lengths.begin(), forest.path_lengths.end(), 0U) != forest.path_lengths.end()) {
      throw std::invalid_argument("pack_forests: zero-length path in forest");
    }
    const std::size_t need = forest.vertex_count();
    if (path < paths.paths.size() && offset + need > paths.paths[path].size() &&
        path + 1 < paths.paths.size() && need <= paths.paths[path + 1].size()) {
      ++path;
      offset = 0;
    }
    // A forest that fits neither here nor on a fresh next path is skipped
    // without giving up the current position.
    if (path >= paths.paths.size() || offset + need > paths.paths[path].size()) {
      out.unplaced.push_back(f);
      continue;
    }
    const auto& route = paths.paths[path];
    ForestPlacement placement{f, path, offset, {}};
    placement.edges.reserve(forest.parameter());
    std::size_t at = offset;
    for (std::uint32_t len : forest.path_lengths) {
      for (std::uint32_t i = 0; i < len; ++i) {
        placement.edges.push_back(make_edge(route[at + i], route[at + i + 1]));
      }
      at += len + 1;
    }
    offset = at;
    out.placed.push_back(std::move(placement));
  }
  return out;
}

}  // namespace taulab
