#include "taulab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "taulab/rng.hpp"

namespace taulab {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= n_) {
      throw std::invalid_argument("vertex " + std::to_string(e.v) + " out of range for n=" +
                                  std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  targets_.resize(2 * edges_.size());
  edge_ids_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so writing in order keeps each list sorted
  // for the u side; the v side is sorted below.
  for (std::uint32_t id = 0; id < edges_.size(); ++id) {
    const Edge e = edges_[id];
    targets_[fill[e.u]] = e.v;
    edge_ids_[fill[e.u]++] = id;
    targets_[fill[e.v]] = e.u;
    edge_ids_[fill[e.v]++] = id;
  }
  std::vector<std::pair<Vertex, std::uint32_t>> scratch;
  for (std::size_t v = 0; v < n_; ++v) {
    const std::size_t lo = offsets_[v];
    const std::size_t hi = offsets_[v + 1];
    if (std::is_sorted(targets_.begin() + lo, targets_.begin() + hi)) continue;
    scratch.clear();
    for (std::size_t i = lo; i < hi; ++i) scratch.emplace_back(targets_[i], edge_ids_[i]);
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t i = lo; i < hi; ++i) {
      targets_[i] = scratch[i - lo].first;
      edge_ids_[i] = scratch[i - lo].second;
    }
  }
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a >= n_ || b >= n_ || a == b) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph edge_subgraph(std::span<const Edge> edges) {
  std::unordered_map<Vertex, Vertex> relabel;
  relabel.reserve(2 * edges.size());
  std::vector<Edge> local;
  local.reserve(edges.size());
  auto id = [&](Vertex x) {
    auto [it, fresh] = relabel.try_emplace(x, static_cast<Vertex>(relabel.size()));
    return it->second;
  };
  for (const Edge& e : edges) {
    const Vertex a = id(e.u);
    const Vertex b = id(e.v);
    local.push_back(make_edge(a, b));
  }
  return Graph(relabel.size(), std::move(local));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::unordered_map<Vertex, Vertex> relabel;
  relabel.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    relabel.emplace(vertices[i], static_cast<Vertex>(i));
  }
  std::vector<Edge> local;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex y : g.neighbors(vertices[i])) {
      auto it = relabel.find(y);
      if (it != relabel.end() && it->second > i) {
        local.push_back({static_cast<Vertex>(i), it->second});
      }
    }
  }
  return Graph(vertices.size(), std::move(local));
}

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == g.order();
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && connected_components(g).size() == 1;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("gen_gnp: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
  std::vector<Edge> edges;
  if (p == 0.0 || n < 2) return Graph(n);
  if (p == 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
  }

  CounterRng rng(seed);
  const double log_q = std::log1p(-p);
  const double total_pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  edges.reserve(static_cast<std::size_t>(total_pairs * p * 1.1) + 16);
  // Pairs are walked column by column: (w, v) with w < v.
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = rng.uniform01();
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip >= total_pairs) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph(n, std::move(edges));
}

}  // namespace taulab
