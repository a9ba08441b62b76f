#include "taulab/builders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "taulab/bounds.hpp"
#include "taulab/errors.hpp"

namespace taulab {

namespace {

std::vector<Edge> edges_outside(const Graph& g, const std::unordered_set<std::uint64_t>& taken) {
  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if (!taken.contains(edge_key(e))) rest.push_back(e);
  }
  return rest;
}

}  // namespace

Coloring build_dense_coloring(const EmbedResult& result, const Graph& host) {
  Coloring c{host, {}, {}};
  std::unordered_set<std::uint64_t> taken;
  for (const auto& tree : result.embedded) {
    for (const Edge& e : tree.edges) taken.insert(edge_key(make_edge(e.u, e.v)));
    c.classes.push_back(tree.edges);
    c.labels.emplace_back(TreeLabel{tree.code});
  }
  attach_leftover(c, edges_outside(host, taken));
  check_partition(c);
  return c;
}

std::uint32_t sparse_k(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sparse_k: n must be at least 2");
  const double L = std::log(static_cast<double>(n));
  return static_cast<std::uint32_t>(std::ceil(L * L));
}

SparseBuild build_sparse(const Graph& g, std::uint32_t k, const SparseOptions& opts) {
  if (k < 2) throw std::invalid_argument("build_sparse: k must be at least 2");
  if (g.size() == 0) throw std::invalid_argument("build_sparse: graph has no edges");
  const std::size_t n = g.order();
  const std::size_t target =
      opts.target_len.value_or(static_cast<std::size_t>(std::floor(opts.c_path * static_cast<double>(n))));
  const std::size_t max_paths = opts.max_paths.value_or(2 * g.size() / n);

  SparseBuild out{Coloring{g, {}, {}}, {}, {}, {}};
  if (target > 0 && max_paths > 0) out.paths = dfs_path_pack(g, target, max_paths);

  // Each forest needs at least k + 1 path vertices, which bounds how many
  // can be placed; offer one more than that.
  const std::size_t room = out.paths.total_vertices() / (k + 1) + 1;
  if (!out.paths.paths.empty()) {
    PartitionGenerator gen(k);
    while (out.forests.size() < room) {
      auto f = gen.next();
      if (!f) break;
      out.forests.push_back(std::move(*f));
    }
  }
  out.packing = pack_forests(out.paths, out.forests);

  std::unordered_set<std::uint64_t> taken;
  for (const auto& placed : out.packing.placed) {
    for (const Edge& e : placed.edges) taken.insert(edge_key(e));
    out.coloring.classes.push_back(placed.edges);
    out.coloring.labels.emplace_back(ForestLabel{forest_code(out.forests[placed.forest_index])});
  }
  attach_leftover(out.coloring, edges_outside(g, taken));
  check_partition(out.coloring);
  return out;
}

std::vector<std::uint64_t> census_box_demand(std::span<const std::uint32_t> caps) {
  std::vector<std::uint64_t> demand(caps.size());
  for (std::size_t i = 0; i < caps.size(); ++i) {
    std::uint64_t d = std::uint64_t{caps[i]} * (caps[i] + 1) / 2;
    for (std::size_t j = 0; j < caps.size(); ++j) {
      if (j != i) d *= caps[j] + 1;
    }
    demand[i] = d;
  }
  return demand;
}

Coloring build_census_coloring(const Graph& g, std::span<const std::uint32_t> caps) {
  if (std::all_of(caps.begin(), caps.end(), [](std::uint32_t x) { return x == 0; })) {
    throw ConstructionError("census coloring: every cap is zero");
  }
  const std::size_t top = caps.size() + 1;  // largest path order used

  // Isolated path components by order, as edge lists in host labels.
  std::vector<std::vector<std::vector<Edge>>> pool(top + 1);
  for (const auto& comp : connected_components(g)) {
    const std::size_t order = comp.size();
    if (order < 2 || order > top) continue;
    std::vector<Edge> edges;
    std::size_t max_deg = 0;
    for (Vertex v : comp) {
      max_deg = std::max(max_deg, g.degree(v));
      for (Vertex w : g.neighbors(v)) {
        if (v < w) edges.push_back(Edge{v, w});
      }
    }
    if (edges.size() + 1 == order && max_deg <= 2) pool[order].push_back(std::move(edges));
  }
  const auto demand = census_box_demand(caps);
  for (std::size_t i = 0; i < caps.size(); ++i) {
    if (demand[i] > pool[i + 2].size()) {
      throw ConstructionError("census coloring: needs " + std::to_string(demand[i]) + " isolated P" +
                              std::to_string(i + 2) + ", graph has " + std::to_string(pool[i + 2].size()));
    }
  }

  Coloring c{g, {}, {}};
  std::unordered_set<std::uint64_t> taken;
  std::vector<std::size_t> next(top + 1, 0);
  std::vector<std::uint32_t> t(caps.size(), 0);
  // Odometer over the box, last coordinate fastest, skipping the zero vector.
  while (true) {
    std::size_t pos = caps.size();
    while (pos > 0 && t[pos - 1] == caps[pos - 1]) t[--pos] = 0;
    if (pos == 0) break;
    ++t[pos - 1];
    std::vector<Edge> cls;
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::uint32_t j = 0; j < t[i]; ++j) {
        const auto& piece = pool[i + 2][next[i + 2]++];
        cls.insert(cls.end(), piece.begin(), piece.end());
      }
    }
    for (const Edge& e : cls) taken.insert(edge_key(e));
    c.classes.push_back(std::move(cls));
    c.labels.emplace_back(CensusLabel{t});
  }
  attach_leftover(c, edges_outside(g, taken));
  check_partition(c);
  return c;
}

VerysparseBuild build_verysparse(const Graph& g, double p, std::uint64_t k, double safety) {
  if (k < 2) throw std::invalid_argument("build_verysparse: k must be at least 2");
  if (!(safety > 0 && safety <= 1)) throw std::invalid_argument("build_verysparse: safety must lie in (0, 1]");
  if (!(p > 0 && p <= 1)) throw std::invalid_argument("build_verysparse: p must lie in (0, 1]");
  const double n = static_cast<double>(g.order());
  const ComponentCensus cen = census(g);

  VerysparseBuild out;
  out.ell = ell(k);
  for (std::uint32_t i = 2; i <= out.ell; ++i) {
    const std::size_t supply = cen.path_count(i);
    const double scale = std::pow(n, i) * std::pow(p, i - 1);
    const double ci = safety * static_cast<double>(supply) / scale;
    const double x = ci > 0 ? xi(i, n, p, ci, k) : -1.0;
    out.supply.push_back(supply);
    out.c.push_back(ci);
    out.xi.push_back(x);
    out.caps.push_back(x >= 1 ? static_cast<std::uint32_t>(std::min(std::floor(x), double(supply))) : 0);
  }
  // Shrink caps until the box fits the supply.
  while (true) {
    const auto demand = census_box_demand(out.caps);
    std::size_t bad = demand.size();
    for (std::size_t i = 0; i < demand.size(); ++i) {
      if (demand[i] > out.supply[i]) {
        bad = i;
        break;
      }
    }
    if (bad == demand.size()) break;
    --out.caps[bad];
  }
  out.coloring = build_census_coloring(g, out.caps);
  return out;
}

double census_upper_bound(const ComponentCensus& c, double n, double p, std::uint64_t k) {
  const std::uint32_t l = ell(k);
  std::vector<double> A;
  for (std::uint32_t i = 1; i + 2 <= l; ++i) A.push_back(static_cast<double>(c.tree_count(i + 1)));
  const double B = 2.0 * static_cast<double>(c.tree_count(l));
  const double m = std::max<double>(1.0, static_cast<double>(c.component_count()));
  return upper_F(A, B, n, p, k, m);
}

}  // namespace taulab
