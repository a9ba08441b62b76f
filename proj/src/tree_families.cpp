#include "taulab/tree_families.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "taulab/errors.hpp"
#include "taulab/rooted_binary.hpp"

namespace taulab {

std::vector<CodedTree> all_free_trees(std::size_t t, std::size_t max_degree) {
  if (t == 0 || t > kExhaustiveTreeOrder) {
    throw std::invalid_argument("all_free_trees: t=" + std::to_string(t) + " outside [1, " +
                                std::to_string(kExhaustiveTreeOrder) + "]");
  }
  std::map<CanonicalCode, Graph> level;
  Graph single(1);
  level.emplace(ahu_code(single), single);
  for (std::size_t order = 2; order <= t; ++order) {
    std::map<CanonicalCode, Graph> grown;
    for (const auto& [code, tree] : level) {
      const auto leaf = static_cast<Vertex>(tree.order());
      for (Vertex v = 0; v < tree.order(); ++v) {
        if (max_degree != 0 && tree.degree(v) + 1 > max_degree) continue;
        std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
        edges.push_back({v, leaf});
        Graph bigger(order, std::move(edges));
        auto c = ahu_code(bigger);
        grown.try_emplace(std::move(c), std::move(bigger));
      }
    }
    level = std::move(grown);
  }
  std::vector<CodedTree> out;
  out.reserve(level.size());
  for (auto& [code, tree] : level) out.push_back({tree, code});
  return out;
}

std::optional<CodedTree> ListTreeSource::next() {
  if (pos_ >= trees_.size()) return std::nullopt;
  return trees_[pos_++];
}

SampledMaxDeg3Source::SampledMaxDeg3Source(std::size_t t, CounterRng rng,
                                           std::size_t max_consecutive_duplicates)
    : t_(t), rng_(rng), patience_(max_consecutive_duplicates) {
  if (t == 0) throw std::invalid_argument("SampledMaxDeg3Source: t must be positive");
}

std::optional<CodedTree> SampledMaxDeg3Source::next() {
  if (exhausted_) return std::nullopt;
  for (std::size_t misses = 0; misses <= patience_; ++misses) {
    Graph g = sample_rooted_binary(t_, rng_).to_graph();
    ++drawn_;
    CanonicalCode code = ahu_code(g);
    if (seen_.insert(code).second) return CodedTree{std::move(g), std::move(code)};
  }
  exhausted_ = true;
  return std::nullopt;
}

std::vector<CodedTree> distinct_maxdeg3_trees(std::size_t t, std::size_t want, CounterRng& rng,
                                              std::size_t sample_budget) {
  if (want == 0) throw std::invalid_argument("distinct_maxdeg3_trees: want must be positive");
  if (t <= kExhaustiveTreeOrder) {
    auto all = all_free_trees(t, 3);
    if (all.size() < want) {
      throw ConstructionError("only " + std::to_string(all.size()) +
                              " non-isomorphic trees of order " + std::to_string(t) +
                              " with max degree 3 exist; " + std::to_string(want) + " requested");
    }
    all.resize(want);
    return all;
  }
  if (sample_budget == 0) sample_budget = 50 * want + 1000;
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  std::vector<CodedTree> out;
  for (std::size_t draw = 0; draw < sample_budget && out.size() < want; ++draw) {
    Graph g = sample_rooted_binary(t, rng).to_graph();
    CanonicalCode code = ahu_code(g);
    if (seen.insert(code).second) out.push_back({std::move(g), std::move(code)});
  }
  if (out.size() < want) {
    throw ConstructionError("sampling budget exhausted after " + std::to_string(out.size()) +
                            " of " + std::to_string(want) + " trees of order " + std::to_string(t));
  }
  return out;
}

}  // namespace taulab
