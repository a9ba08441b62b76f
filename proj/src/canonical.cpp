#include "taulab/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "taulab/small_canon.hpp"

namespace taulab {

namespace {

constexpr Vertex kNone = ~Vertex{0};

// Vertices of the tree center(s), by repeated leaf removal.
std::vector<Vertex> tree_centers(const Graph& tree) {
  const std::size_t n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex y : tree.neighbors(leaf)) {
        if (--deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string rooted_ahu(const Graph& tree, Vertex root) {
  const std::size_t n = tree.order();
  std::vector<Vertex> parent(n, kNone);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<Vertex> order{root};
  order.reserve(n);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex x = order[i];
    for (Vertex y : tree.neighbors(x)) {
      if (parent[y] == kNone) {
        parent[y] = x;
        depth[y] = depth[x] + 1;
        order.push_back(y);
      }
    }
  }

  // Bottom-up: rank each node within its depth level by its sorted list of
  // child ranks. Lexicographic order on these lists is the same total order
  // on subtree shapes at every level, so children sorted by rank appear in
  // a tree-independent order.
  std::vector<std::vector<std::uint32_t>> child_ranks(n);
  std::vector<std::uint32_t> rank(n, 0);
  std::size_t hi = order.size();
  while (hi > 0) {
    std::size_t lo = hi;
    while (lo > 0 && depth[order[lo - 1]] == depth[order[hi - 1]]) --lo;
    std::vector<Vertex> level(order.begin() + static_cast<std::ptrdiff_t>(lo),
                              order.begin() + static_cast<std::ptrdiff_t>(hi));
    for (Vertex v : level) std::sort(child_ranks[v].begin(), child_ranks[v].end());
    std::sort(level.begin(), level.end(),
              [&](Vertex a, Vertex b) { return child_ranks[a] < child_ranks[b]; });
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && child_ranks[level[i]] != child_ranks[level[i - 1]]) ++r;
      rank[level[i]] = r;
    }
    for (Vertex v : level) {
      if (v != root) child_ranks[parent[v]].push_back(rank[v]);
    }
    hi = lo;
  }

  std::vector<std::vector<Vertex>> kids(n);
  for (Vertex v : order) {
    if (v != root) kids[parent[v]].push_back(v);
  }
  for (auto& k : kids) {
    std::sort(k.begin(), k.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
  }

  std::string out;
  out.reserve(2 * n);
  // (vertex, next child index)
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  out.push_back('(');
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < kids[v].size()) {
      const Vertex c = kids[v][next++];
      out.push_back('(');
      stack.emplace_back(c, 0);
    } else {
      out.push_back(')');
      stack.pop_back();
    }
  }
  return out;
}

CanonicalCode ahu_code(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("ahu_code: input is not a tree");
  const auto centers = tree_centers(tree);
  std::string best = rooted_ahu(tree, centers.front());
  if (centers.size() == 2) best = std::min(best, rooted_ahu(tree, centers.back()));
  return CanonicalCode{"T" + best};
}

CanonicalCode invariant_code(const Graph& connected) {
  std::map<std::size_t, std::size_t> hist;
  for (Vertex v = 0; v < connected.order(); ++v) ++hist[connected.degree(v)];
  std::string s = "X" + std::to_string(connected.order()) + "," + std::to_string(connected.size());
  for (auto [d, c] : hist) s += "," + std::to_string(d) + "x" + std::to_string(c);
  return CanonicalCode{std::move(s)};
}

CanonicalCode component_code(const Graph& connected, std::size_t cap) {
  if (connected.size() + 1 == connected.order()) return ahu_code(connected);
  if (connected.order() > cap) {
    throw std::domain_error("component_code: cyclic component with " +
                            std::to_string(connected.order()) + " vertices exceeds cap " +
                            std::to_string(cap));
  }
  return CanonicalCode{small_canonical_form(connected)};
}

CanonicalCode graph_code(const Graph& g, std::size_t cap) {
  std::vector<std::string> parts;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) continue;
    parts.push_back(component_code(induced_subgraph(g, comp), cap).bytes);
  }
  std::sort(parts.begin(), parts.end());
  std::string s = "M";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) s.push_back('|');
    s += parts[i];
  }
  return CanonicalCode{std::move(s)};
}

}  // namespace taulab
