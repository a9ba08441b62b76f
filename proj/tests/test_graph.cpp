#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "taulab/census.hpp"
#include "taulab/errors.hpp"
#include "taulab/graph.hpp"
#include "taulab/graph_io.hpp"
#include "taulab/rng.hpp"

using namespace taulab;

TEST_CASE("counter rng streams are reproducible and distinct") {
  CounterRng a(7), b(7), c(7, 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
  CounterRng d(7);
  const auto child = d.split(3);
  CHECK(d.counter() == 0);
  CHECK(child.stream() == 3);
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("below is unbiased on a small range") {
  CounterRng rng(11);
  std::vector<int> counts(6, 0);
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++counts[rng.below(6)];
  for (int c : counts) CHECK(std::abs(c - draws / 6) < 5 * std::sqrt(draws / 6.0));
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {Edge{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {Edge{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {Edge{0, 1}, Edge{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
  CHECK(make_edge(5, 2) == Edge{2, 5});

  const Graph g(4, {Edge{2, 3}, Edge{0, 1}, Edge{1, 2}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 2);
  // adjacency agrees with the edge list
  std::size_t incidences = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    const auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Edge e = g.edges()[ids[i]];
      CHECK((e == make_edge(v, nb[i])));
      ++incidences;
    }
  }
  CHECK(incidences == 2 * g.size());
}

TEST_CASE("components and subgraphs") {
  const Graph g = oracle::disjoint_union(oracle::path(3), oracle::disjoint_union(Graph(1), oracle::cycle(4)));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[1] == std::vector<Vertex>{3});
  CHECK(comps[2].size() == 4);
  CHECK(is_forest(oracle::path(5)));
  CHECK(is_tree(oracle::star(4)));
  CHECK_FALSE(is_tree(oracle::cycle(4)));
  CHECK_FALSE(is_tree(oracle::matching(2)));

  const std::vector<Edge> some{Edge{10, 20}, Edge{20, 30}};
  const Graph sub = edge_subgraph(some);
  CHECK(sub.order() == 3);
  CHECK(sub.size() == 2);
  CHECK(oracle::isomorphic(sub, oracle::path(3)));
}

TEST_CASE("gen_gnp extremes") {
  CHECK(gen_gnp(4, 1.0, 3).size() == 6);
  CHECK(gen_gnp(5, 0.0, 3).size() == 0);
  CHECK_THROWS_AS(gen_gnp(5, 1.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp(5, -0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_gnp(0, 0.5, 3), std::invalid_argument);
}

TEST_CASE("gen_gnp edge count and reproducibility") {
  const Graph g = gen_gnp(1000, 0.01, 7);
  const double mu = 999.0 * 1000 / 2 * 0.01;
  const double sigma = std::sqrt(mu * 0.99);
  CHECK(std::abs(static_cast<double>(g.size()) - mu) <= 3 * sigma);
  CHECK(g == gen_gnp(1000, 0.01, 7));
  CHECK_FALSE(g == gen_gnp(1000, 0.01, 8));
}

TEST_CASE("gen_gnp pairs look independent") {
  // Each fixed pair should appear in about p of the seeds.
  const std::size_t n = 12;
  const double p = 0.3;
  std::vector<int> hits(n * n, 0);
  const int seeds = 4000;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = gen_gnp(n, p, static_cast<std::uint64_t>(s));
    for (const Edge& e : g.edges()) ++hits[e.u * n + e.v];
  }
  const double sigma = std::sqrt(seeds * p * (1 - p));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) CHECK(std::abs(hits[u * n + v] - seeds * p) < 5 * sigma);
  }
}

TEST_CASE("edge list round trip") {
  const Graph k4 = oracle::complete(4);
  std::stringstream ss;
  write_edgelist(ss, k4);
  CHECK(ss.str() == "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(read_edgelist(ss) == k4);

  std::stringstream empty("n 5\n");
  const Graph e = read_edgelist(empty);
  CHECK(e.order() == 5);
  CHECK(e.size() == 0);
}

TEST_CASE("edge list reader rejects bad input") {
  auto parse = [](const std::string& text) {
    std::stringstream ss(text);
    return read_edgelist(ss);
  };
  CHECK_THROWS_AS(parse("n 3\n2 2\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("n 3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("n 3\n0 1\n\n2 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK(parse("n 3\n\n0 1\n\n").size() == 1);
}

TEST_CASE("census on hand-built graphs") {
  const auto one = census(oracle::path(3));
  CHECK(one.path_counts == std::map<std::size_t, std::size_t>{{3, 1}});

  const Graph g = oracle::disjoint_union(oracle::matching(2), oracle::complete(3));
  const auto c = census(g);
  CHECK(c.path_counts == std::map<std::size_t, std::size_t>{{2, 2}});
  CHECK(c.counts.size() == 2);
  CHECK(c.total_vertices() == 7);
  CHECK(c.component_count() == 3);
  bool triangle = false;
  for (const auto& [code, cls] : c.counts) {
    if (cls.order == 3) {
      triangle = true;
      CHECK(cls.size == 3);
      CHECK_FALSE(cls.is_tree);
      CHECK(cls.count == 1);
    }
  }
  CHECK(triangle);

  const auto iso = census(Graph(4));
  CHECK(iso.path_counts.empty());
  CHECK(iso.component_count() == 4);
  CHECK(iso.tree_count(1) == 4);
}

TEST_CASE("census agrees with a brute-force classification") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(12);
    const double p = 0.05 + 0.4 * rng.uniform01();
    const Graph g = oracle::coin_graph(n, p, rng);

    // Naive: group components by pairwise brute-force isomorphism.
    std::vector<Graph> reps;
    std::vector<std::size_t> mult;
    std::map<std::size_t, std::size_t> paths;
    for (const auto& comp : connected_components(g)) {
      const Graph sub = induced_subgraph(g, comp);
      if (sub.order() >= 2 && sub.size() + 1 == sub.order() && sub.max_degree() <= 2) ++paths[sub.order()];
      bool found = false;
      for (std::size_t r = 0; r < reps.size() && !found; ++r) {
        if (oracle::isomorphic(reps[r], sub)) {
          ++mult[r];
          found = true;
        }
      }
      if (!found) {
        reps.push_back(sub);
        mult.push_back(1);
      }
    }
    const auto c = census(g);
    CHECK(c.path_counts == paths);
    CHECK(c.total_vertices() == n);
    std::multiset<std::size_t> naive(mult.begin(), mult.end()), ours;
    for (const auto& [code, cls] : c.counts) ours.insert(cls.count);
    CHECK(ours == naive);
  }
}

TEST_CASE("isolated path counts in a sparse random graph") {
  const std::size_t n = 100000;
  const double p = std::pow(static_cast<double>(n), -1.3);
  const Graph g = gen_gnp(n, p, 99);
  const auto c = census(g);
  for (std::size_t i : {2, 3}) {
    const auto m = oracle::isolated_path_moments(n, p, i);
    CHECK(std::abs(static_cast<double>(c.path_count(i)) - m.mean) <= 3 * std::sqrt(m.variance));
  }
}
