#include "taulab/lazy_random_graph.hpp"

#include <stdexcept>
#include <string>

#include "taulab/rng.hpp"

namespace taulab {

LazyRandomGraph::LazyRandomGraph(std::size_t n, double p, std::uint64_t seed)
    : n_(n), p_(p), seed_(seed), key_(mix64(seed ^ 0xA0761D6478BD642FULL)), partners_(n) {
  if (n < 2) throw std::invalid_argument("LazyRandomGraph: need at least 2 vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("LazyRandomGraph: p must lie in [0, 1]");
}

bool LazyRandomGraph::outcome(Vertex u, Vertex v) const noexcept {
  if (p_ >= 1.0) return true;
  if (p_ <= 0.0) return false;
  const Edge e = u < v ? Edge{u, v} : Edge{v, u};
  return to_unit(keyed_hash(key_, edge_key(e))) < p_;
}

bool LazyRandomGraph::reveal(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("reveal: vertex out of range");
  if (u == v) throw std::invalid_argument("reveal: u == v");
  if (!partners_[u].insert(v).second) {
    throw std::logic_error("reveal: pair " + std::to_string(u) + " " + std::to_string(v) +
                           " already revealed");
  }
  partners_[v].insert(u);
  const bool present = outcome(u, v);
  history_.push_back({u, v, present});
  return present;
}

bool LazyRandomGraph::is_revealed(Vertex u, Vertex v) const {
  return u < n_ && partners_[u].contains(v);
}

bool LazyRandomGraph::is_present(Vertex u, Vertex v) const {
  return is_revealed(u, v) && outcome(u, v);
}

std::vector<Edge> LazyRandomGraph::present_edges() const {
  std::vector<Edge> out;
  for (const auto& r : history_) {
    if (r.present) out.push_back(make_edge(r.initiator, r.other));
  }
  return out;
}

Graph LazyRandomGraph::materialize() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (outcome(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n_, std::move(edges));
}

}  // namespace taulab
