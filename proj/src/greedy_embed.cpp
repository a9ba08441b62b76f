#include "taulab/greedy_embed.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace taulab {

namespace {

constexpr Vertex kUnset = ~Vertex{0};

struct BfsOrder {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

BfsOrder bfs_order(const Graph& tree) {
  BfsOrder out;
  out.parent.assign(tree.order(), kUnset);
  out.order.push_back(0);
  out.parent[0] = 0;
  for (std::size_t i = 0; i < out.order.size(); ++i) {
    for (Vertex y : tree.neighbors(out.order[i])) {
      if (out.parent[y] == kUnset) {
        out.parent[y] = out.order[i];
        out.order.push_back(y);
      }
    }
  }
  return out;
}

class Embedder {
 public:
  Embedder(LazyRandomGraph& g, std::size_t budget, CounterRng& rng)
      : g_(g), n_(g.order()), budget_(budget), rng_(rng), history_start_(g.reveal_count()) {
    auto& c = result_.trace.counters;
    c.rev.assign(n_, 0);
    c.rev_active.assign(n_, 0);
    c.rev_inactive.assign(n_, 0);
    result_.trace.activations.assign(n_, 0);
  }

  EmbedResult run(TreeSource& trees) {
    auto& trace = result_.trace;
    for (;;) {
      if (trace.steps >= budget_) {
        trace.stop = EmbedStop::kBudget;
        break;
      }
      auto tree = trees.next();
      if (!tree) {
        trace.stop = EmbedStop::kSupplyExhausted;
        break;
      }
      validate(tree->graph);
      if (!embed_one(*tree)) break;
    }
    const auto& h = g_.history();
    trace.history.assign(h.begin() + static_cast<std::ptrdiff_t>(history_start_), h.end());
    return std::move(result_);
  }

 private:
  static void validate(const Graph& t) {
    if (t.order() < 2) throw std::invalid_argument("greedy_embed: tree order must be at least 2");
    if (!is_tree(t)) throw std::invalid_argument("greedy_embed: supplied graph is not a tree");
    if (t.max_degree() > 3) throw std::invalid_argument("greedy_embed: tree max degree exceeds 3");
  }

  void activate(Vertex v) {
    if (v != active_) {
      active_ = v;
      ++result_.trace.activations[v];
    }
  }

  // Vertices w != a with (a, w) unrevealed and w outside the current image.
  std::size_t admissible_count(Vertex a) const {
    std::size_t blocked = g_.revealed_degree(a);
    for (Vertex w : image_) {
      if (w != a && !g_.is_revealed(a, w)) ++blocked;
    }
    return (n_ - 1) - blocked;
  }

  bool admissible(Vertex a, Vertex w) const {
    return w != a && !g_.is_revealed(a, w) &&
           std::find(image_.begin(), image_.end(), w) == image_.end();
  }

  std::optional<Vertex> draw_partner(Vertex a) {
    const std::size_t avail = admissible_count(a);
    if (avail == 0) return std::nullopt;
    if (4 * avail >= n_) {
      for (;;) {
        const auto w = static_cast<Vertex>(rng_.below(n_));
        if (admissible(a, w)) return w;
      }
    }
    std::vector<Vertex> pool;
    pool.reserve(avail);
    for (Vertex w = 0; w < n_; ++w) {
      if (admissible(a, w)) pool.push_back(w);
    }
    return pool[rng_.below(pool.size())];
  }

  // Returns false when the whole process must stop.
  bool embed_one(const CodedTree& tree) {
    auto& trace = result_.trace;
    const BfsOrder bfs = bfs_order(tree.graph);
    std::vector<Vertex> mapping(tree.graph.order(), kUnset);
    image_.clear();

    const auto root = static_cast<Vertex>(rng_.below(n_));
    mapping[bfs.order[0]] = root;
    image_.push_back(root);
    active_ = kUnset;
    activate(root);
    const std::size_t first_step = trace.steps + 1;

    for (std::size_t j = 1; j < bfs.order.size(); ++j) {
      const Vertex u = bfs.order[j];
      const Vertex a = mapping[bfs.parent[u]];
      activate(a);
      for (;;) {
        if (trace.steps >= budget_) {
          trace.stop = EmbedStop::kBudget;
          return false;
        }
        const auto w = draw_partner(a);
        if (!w) {
          trace.stop = EmbedStop::kFailure;
          trace.failed = true;
          trace.failure_step = trace.steps;
          return false;
        }
        const bool edge = g_.reveal(a, *w);
        ++trace.steps;
        ++trace.counters.rev[a];
        ++trace.counters.rev[*w];
        ++trace.counters.rev_active[a];
        ++trace.counters.rev_inactive[*w];
        if (edge) {
          mapping[u] = *w;
          image_.push_back(*w);
          break;
        }
      }
    }

    EmbeddedTree out;
    out.code = tree.code;
    out.edges.reserve(tree.graph.size());
    for (const Edge& e : tree.graph.edges()) out.edges.push_back(make_edge(mapping[e.u], mapping[e.v]));
    out.mapping = std::move(mapping);
    result_.embedded.push_back(std::move(out));
    trace.tree_spans.push_back({first_step, trace.steps});
    return true;
  }

  LazyRandomGraph& g_;
  std::size_t n_;
  std::size_t budget_;
  CounterRng& rng_;
  std::size_t history_start_;
  EmbedResult result_;
  std::vector<Vertex> image_;
  Vertex active_ = kUnset;
};

}  // namespace

const char* to_string(EmbedStop stop) noexcept {
  switch (stop) {
    case EmbedStop::kBudget:
      return "budget";
    case EmbedStop::kSupplyExhausted:
      return "supply_exhausted";
    case EmbedStop::kFailure:
      return "failure";
  }
  return "unknown";
}

EmbedTrace::Counters EmbedTrace::counters_at(std::size_t step) const {
  const std::size_t n = counters.rev.size();
  Counters c{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0),
             std::vector<std::uint32_t>(n, 0)};
  step = std::min(step, history.size());
  for (std::size_t i = 0; i < step; ++i) {
    const auto& r = history[i];
    ++c.rev[r.initiator];
    ++c.rev[r.other];
    ++c.rev_active[r.initiator];
    ++c.rev_inactive[r.other];
  }
  return c;
}

EmbedResult greedy_embed(LazyRandomGraph& g, TreeSource& trees, std::size_t step_budget,
                         CounterRng& rng) {
  if (step_budget == 0) throw std::invalid_argument("greedy_embed: step budget must be positive");
  return Embedder(g, step_budget, rng).run(trees);
}

DiagnosticsReport diagnostics_check(const EmbedTrace& trace, double epsilon, std::size_t n, double p) {
  DiagnosticsReport r;
  auto max_of = [](const std::vector<std::uint32_t>& v) -> std::size_t {
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
  };
  r.max_rev = max_of(trace.counters.rev);
  r.max_rev_active = max_of(trace.counters.rev_active);
  r.max_rev_inactive = max_of(trace.counters.rev_inactive);
  r.max_activations = max_of(trace.activations);
  const double en = epsilon * static_cast<double>(n);
  r.rev_threshold = 1000.0 * en;
  r.half_threshold = 500.0 * en;
  r.activation_threshold = 3.0 * en * p;
  r.rev_ok = static_cast<double>(r.max_rev) <= r.rev_threshold;
  r.rev_active_ok = static_cast<double>(r.max_rev_active) <= r.half_threshold;
  r.rev_inactive_ok = static_cast<double>(r.max_rev_inactive) <= r.half_threshold;
  r.activations_ok = static_cast<double>(r.max_activations) <= r.activation_threshold;
  return r;
}

std::size_t dense_tree_order(std::size_t n) {
  if (n < 2) throw std::invalid_argument("dense_tree_order: n must be at least 2");
  return static_cast<std::size_t>(std::floor(3.0 * std::log2(static_cast<double>(n))));
}

}  // namespace taulab
