#include <doctest.h>

#include <cmath>
#include <set>

#include "oracles.hpp"
#include "taulab/bigint.hpp"
#include "taulab/canonical.hpp"
#include "taulab/errors.hpp"
#include "taulab/partitions.hpp"
#include "taulab/rooted_binary.hpp"
#include "taulab/tree_families.hpp"

using namespace taulab;

TEST_CASE("binomials and bounded uniform integers") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CounterRng rng(1);
  const BigInt bound("1000000000000000000000000000");
  for (int i = 0; i < 200; ++i) {
    const BigInt x = uniform_below(bound, rng);
    CHECK(x >= 0);
    CHECK(x < bound);
  }
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 3000; ++i) ++counts[static_cast<int>(uniform_below(BigInt(3), rng))];
  for (int c : counts) CHECK(std::abs(c - 1000) < 150);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(4) == 14);
  CHECK(catalan(10) == 16796);
  CHECK_THROWS_AS(catalan(0), std::invalid_argument);
  // C_{t+1} = sum C_i C_{t-i} with C_0 = 1
  for (std::uint64_t t = 1; t < 30; ++t) {
    BigInt s = 2 * catalan(t);
    for (std::uint64_t i = 1; i < t; ++i) s += catalan(i) * catalan(t - i);
    CHECK(s == catalan(t + 1));
  }
}

TEST_CASE("rooted binary enumeration matches catalan and unranking") {
  for (std::size_t t = 1; t <= 10; ++t) {
    const auto all = enumerate_rooted_binary(t);
    CHECK(all.size() == catalan(t));
    std::set<RootedBinaryTree> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& tree : all) {
      const Graph g = tree.to_graph();
      CHECK(is_tree(g));
      CHECK(g.max_degree() <= 3);
    }
    std::set<RootedBinaryTree> unranked;
    for (std::size_t r = 0; r < all.size(); ++r) unranked.insert(unrank_rooted_binary(t, BigInt(r)));
    CHECK(unranked == distinct);
  }
  CHECK_THROWS_AS(unrank_rooted_binary(4, BigInt(14)), std::out_of_range);
  CHECK_THROWS_AS(enumerate_rooted_binary(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_rooted_binary(kRootedBinaryEnumerationCap + 1), std::invalid_argument);
}

TEST_CASE("rooted binary sampling is uniform at t = 4") {
  CounterRng rng(9);
  std::map<RootedBinaryTree, int> hits;
  const int draws = 14000;
  for (int i = 0; i < draws; ++i) ++hits[sample_rooted_binary(4, rng)];
  CHECK(hits.size() == 14);
  for (const auto& [tree, c] : hits) CHECK(std::abs(c - 1000) < 5 * std::sqrt(1000.0));
  CHECK(sample_rooted_binary(200, rng).size() == 200);
}

TEST_CASE("free tree families") {
  const std::size_t all_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t t = 1; t <= 10; ++t) CHECK(all_free_trees(t).size() == all_counts[t - 1]);
  // Trees with max degree <= 3, n = 1..10.
  const std::size_t deg3_counts[] = {1, 1, 1, 2, 2, 4, 6, 11, 18, 37};
  for (std::size_t t = 1; t <= 10; ++t) CHECK(all_free_trees(t, 3).size() == deg3_counts[t - 1]);
  CHECK_THROWS_AS(all_free_trees(kExhaustiveTreeOrder + 1), std::invalid_argument);
}

TEST_CASE("rooted binary shapes cover every max-degree-3 tree class") {
  // Up to 9 nodes; a tree with max degree <= 3 rooted at a leaf is binary.
  for (std::size_t t = 1; t <= 9; ++t) {
    std::set<CanonicalCode> from_binary;
    for (const auto& tree : enumerate_rooted_binary(t)) from_binary.insert(ahu_code(tree.to_graph()));
    std::set<CanonicalCode> from_leaves;
    for (const auto& ct : all_free_trees(t, 3)) from_leaves.insert(ct.code);
    CHECK(from_binary == from_leaves);
  }
}

TEST_CASE("distinct max-degree-3 trees: count lower bound and sampling") {
  for (std::size_t t = 2; t <= 14; ++t) {
    const double bound = std::pow(2.0, static_cast<double>(t) - 1) /
                         (std::pow(static_cast<double>(t), 1.5) * static_cast<double>(t + 1));
    CHECK(static_cast<double>(all_free_trees(t, 3).size()) >= bound);
  }
  CounterRng rng(4);
  const auto trees = distinct_maxdeg3_trees(30, 50, rng);
  REQUIRE(trees.size() == 50);
  std::set<CanonicalCode> codes;
  for (const auto& t : trees) {
    codes.insert(t.code);
    CHECK(t.graph.order() == 30);
    CHECK(t.graph.max_degree() <= 3);
    CHECK(ahu_code(t.graph) == t.code);
  }
  CHECK(codes.size() == 50);
  CHECK_THROWS_AS(distinct_maxdeg3_trees(5, 3, rng), ConstructionError);
  CHECK(distinct_maxdeg3_trees(6, 4, rng).size() == 4);
}

TEST_CASE("sampled source yields each class once") {
  SampledMaxDeg3Source src(6, CounterRng(12), 500);
  std::set<CanonicalCode> seen;
  while (auto t = src.next()) CHECK(seen.insert(t->code).second);
  CHECK(seen.size() == 4);
  CHECK(src.samples_drawn() >= 4);
}

TEST_CASE("partition generator order and counts") {
  const auto p4 = partitions(4);
  const std::vector<std::vector<std::uint32_t>> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(p4.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(p4[i].path_lengths == want[i]);

  const auto counts = partition_counts(30);
  for (std::uint32_t k = 1; k <= 30; ++k) CHECK(counts[k] == partitions(k).size());
  CHECK(partition_count(100) == 190569292);
  CHECK(partition_count(8) == 22);
  CHECK_THROWS_AS(PartitionGenerator(0), std::invalid_argument);
}

TEST_CASE("linear forests") {
  const LinearForest f{{3, 1, 1}};
  CHECK(f.parameter() == 5);
  CHECK(f.path_count() == 3);
  CHECK(f.vertex_count() == 8);
  const Graph g = realize(f);
  CHECK(g.order() == 8);
  CHECK(g.size() == 5);
  CHECK(is_forest(g));
  CHECK(forest_code(LinearForest{{1, 3, 1}}) == forest_code(f));
  CHECK(forest_code(f).bytes == "L3,1,1");

  std::set<CanonicalCode> codes, graphs;
  for (const auto& forest : partitions(8)) {
    codes.insert(forest_code(forest));
    graphs.insert(graph_code(realize(forest)));
  }
  CHECK(codes.size() == 22);
  CHECK(graphs.size() == 22);
}
