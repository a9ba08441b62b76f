#include "taulab/census.hpp"

namespace taulab {

std::size_t ComponentCensus::total_vertices() const {
  std::size_t total = 0;
  for (const auto& [code, cls] : counts) total += cls.order * cls.count;
  return total;
}

std::size_t ComponentCensus::component_count() const {
  std::size_t total = 0;
  for (const auto& [code, cls] : counts) total += cls.count;
  return total;
}

std::size_t ComponentCensus::tree_count(std::size_t order) const {
  std::size_t total = 0;
  for (const auto& [code, cls] : counts) {
    if (cls.is_tree && cls.order == order) total += cls.count;
  }
  return total;
}

std::size_t ComponentCensus::path_count(std::size_t order) const {
  auto it = path_counts.find(order);
  return it == path_counts.end() ? 0 : it->second;
}

ComponentCensus census(const Graph& g) {
  ComponentCensus out;
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    const bool tree = sub.size() + 1 == sub.order();
    const bool path = tree && sub.order() >= 2 && sub.max_degree() <= 2;
    CanonicalCode code = (tree || sub.order() <= kGeneralComponentCap) ? component_code(sub)
                                                                        : invariant_code(sub);
    auto [it, fresh] = out.counts.try_emplace(std::move(code));
    if (fresh) it->second = ComponentClass{sub.order(), sub.size(), tree, path, 0};
    ++it->second.count;
    if (path) ++out.path_counts[sub.order()];
  }
  return out;
}

}  // namespace taulab
