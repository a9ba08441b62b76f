#include "taulab/small_canon.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace taulab {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<Vertex>>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
  }

  std::string run() {
    Cells start;
    if (n_ > 0) {
      std::vector<Vertex> all(n_);
      for (std::size_t i = 0; i < n_; ++i) all[i] = static_cast<Vertex>(i);
      start.push_back(std::move(all));
    }
    search(std::move(start));
    return "G" + std::to_string(n_) + ":" + best_;
  }

 private:
  // Splits cells until every vertex in a cell sees the same number of
  // neighbours in each cell.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Mask> cell_mask(cells.size(), 0);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_mask[c] |= Mask{1} << v;
      }
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> sig(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c) sig[c] = std::popcount(adj_[v] & cell_mask[c]);
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<Vertex> run{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(run));
            run.clear();
            changed = true;
          }
          run.push_back(keyed[i].second);
        }
        next.push_back(std::move(run));
      }
      cells = std::move(next);
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const Mask strip = (Mask{1} << a) | (Mask{1} << b);
    return (adj_[a] & ~strip) == (adj_[b] & ~strip);
  }

  bool all_twins(const std::vector<Vertex>& cell) const {
    for (std::size_t i = 1; i < cell.size(); ++i) {
      if (!twins(cell[0], cell[i])) return false;
    }
    return true;
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::string bits;
      bits.reserve(n_ * (n_ - 1) / 2);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
          bits.push_back((adj_[cells[i][0]] >> cells[j][0]) & 1U ? '1' : '0');
        }
      }
      if (!have_best_ || bits < best_) {
        best_ = std::move(bits);
        have_best_ = true;
      }
      return;
    }
    const auto pos = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = *target;
    // Swapping two twins is an automorphism fixing the current partition,
    // so one branch covers the whole cell.
    const std::size_t branches = all_twins(cell) ? 1 : cell.size();
    for (std::size_t b = 0; b < branches; ++b) {
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(pos));
      child.push_back({cell[b]});
      std::vector<Vertex> rest;
      for (Vertex v : cell) {
        if (v != cell[b]) rest.push_back(v);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(pos) + 1, cells.end());
      search(std::move(child));
    }
  }

  std::size_t n_;
  std::vector<Mask> adj_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::string small_canonical_form(const Graph& g) {
  if (g.order() > kSmallCanonMaxVertices) {
    throw std::domain_error("small_canonical_form: " + std::to_string(g.order()) +
                            " vertices exceeds cap " + std::to_string(kSmallCanonMaxVertices));
  }
  return Canonicalizer(g).run();
}

}  // namespace taulab
