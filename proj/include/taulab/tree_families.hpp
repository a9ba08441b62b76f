#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "taulab/canonical.hpp"
#include "taulab/graph.hpp"
#include "taulab/rng.hpp"

namespace taulab {

struct CodedTree {
  Graph graph;
  CanonicalCode code;
};

/// One representative per isomorphism class of trees on t vertices with
/// maximum degree at most `max_degree` (0 = unbounded), sorted by code.
/// Built by attaching a leaf to every representative of order t - 1 and
/// deduplicating; every tree of order t arises this way since removing a
/// leaf keeps the degree bound. Throws std::invalid_argument above
/// kExhaustiveTreeOrder.
std::vector<CodedTree> all_free_trees(std::size_t t, std::size_t max_degree = 0);

inline constexpr std::size_t kExhaustiveTreeOrder = 18;

/// Source of pairwise non-isomorphic trees, consumed one at a time.
class TreeSource {
 public:
  virtual ~TreeSource() = default;
  /// The next tree, or nullopt when the source is exhausted.
  virtual std::optional<CodedTree> next() = 0;
};

/// Serves a fixed list in order.
class ListTreeSource final : public TreeSource {
 public:
  explicit ListTreeSource(std::vector<CodedTree> trees) : trees_(std::move(trees)) {}
  std::optional<CodedTree> next() override;

 private:
  std::vector<CodedTree> trees_;
  std::size_t pos_ = 0;
};

/// Samples uniform rooted binary trees of order t and yields each new
/// unrooted isomorphism class once (dedup by AHU code). Gives up after
/// `max_consecutive_duplicates` rejected samples in a row.
class SampledMaxDeg3Source final : public TreeSource {
 public:
  SampledMaxDeg3Source(std::size_t t, CounterRng rng, std::size_t max_consecutive_duplicates = 1000);
  std::optional<CodedTree> next() override;

  [[nodiscard]] std::size_t samples_drawn() const noexcept { return drawn_; }

 private:
  std::size_t t_;
  CounterRng rng_;
  std::size_t patience_;
  std::size_t drawn_ = 0;
  bool exhausted_ = false;
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen_;
};

/// `want` pairwise non-isomorphic trees of order t with max degree <= 3.
/// Exhaustive for t <= kExhaustiveTreeOrder (the first `want` in code order),
/// sampled otherwise with at most `sample_budget` draws (0 picks
/// 50 * want + 1000). Throws ConstructionError when the family cannot
/// supply `want` trees or the budget runs out.
std::vector<CodedTree> distinct_maxdeg3_trees(std::size_t t, std::size_t want, CounterRng& rng,
                                              std::size_t sample_budget = 0);

}  // namespace taulab
