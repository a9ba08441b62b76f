#include "taulab/coloring.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace taulab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Path-count vector (t_2, ..., t_len+1) of a class, or nullopt when some
// component is not a path.
std::optional<std::vector<std::uint32_t>> path_vector(std::span<const Edge> edges, std::size_t len) {
  const Graph g = edge_subgraph(edges);
  std::vector<std::uint32_t> counts(len, 0);
  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    if (sub.size() + 1 != sub.order() || sub.max_degree() > 2 || sub.order() < 2) return std::nullopt;
    const std::size_t i = sub.order() - 2;
    if (i >= counts.size()) counts.resize(i + 1, 0);
    ++counts[i];
  }
  return counts;
}

}  // namespace

std::string label_text(const ClassLabel& label) {
  return std::visit(Overloaded{
                        [](const TreeLabel& l) { return "tree " + l.code.bytes; },
                        [](const ForestLabel& l) { return "forest " + l.code.bytes; },
                        [](const CensusLabel& l) {
                          std::string s = "census ";
                          for (std::size_t i = 0; i < l.counts.size(); ++i) {
                            if (i > 0) s.push_back(',');
                            s += std::to_string(l.counts[i]);
                          }
                          return s;
                        },
                        [](const LeftoverLabel&) { return std::string("leftover"); },
                    },
                    label);
}

ClassLabel parse_label(const std::string& text) {
  if (text == "leftover") return LeftoverLabel{};
  const auto space = text.find(' ');
  if (space == std::string::npos) throw std::invalid_argument("bad class label: " + text);
  const std::string kind = text.substr(0, space);
  const std::string rest = text.substr(space + 1);
  if (rest.empty()) throw std::invalid_argument("bad class label: " + text);
  if (kind == "tree") return TreeLabel{CanonicalCode{rest}};
  if (kind == "forest") return ForestLabel{CanonicalCode{rest}};
  if (kind == "census") {
    CensusLabel l;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("bad census label: " + text);
      }
      l.counts.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    }
    return l;
  }
  throw std::invalid_argument("bad class label: " + text);
}

bool is_partition(const Coloring& c) {
  if (c.labels.size() != c.classes.size()) return false;
  std::unordered_set<std::uint64_t> seen;
  std::size_t total = 0;
  for (const auto& cls : c.classes) {
    if (cls.empty()) return false;
    for (const Edge& e : cls) {
      if (!c.host.has_edge(e.u, e.v)) return false;
      if (!seen.insert(edge_key(make_edge(e.u, e.v))).second) return false;
    }
    total += cls.size();
  }
  return total == c.host.size();
}

void check_partition(const Coloring& c) {
  if (!is_partition(c)) throw std::logic_error("coloring does not partition the host edge set");
}

DistinctnessReport verify_distinct(const Coloring& c) {
  std::map<std::size_t, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < c.classes.size(); ++i) by_size[c.classes[i].size()].push_back(i);
  DistinctnessReport report;
  for (const auto& [size, members] : by_size) {
    if (members.size() < 2) continue;
    std::unordered_map<CanonicalCode, std::size_t, CanonicalCodeHash> first;
    for (std::size_t i : members) {
      auto code = graph_code(edge_subgraph(c.classes[i]), kVerifyComponentCap);
      auto [it, fresh] = first.try_emplace(std::move(code), i);
      if (!fresh) {
        report.distinct = false;
        report.offending = std::pair{it->second, i};
        return report;
      }
    }
  }
  return report;
}

void attach_leftover(Coloring& c, std::vector<Edge> leftover) {
  if (leftover.empty()) return;
  bool collides = false;
  for (const auto& cls : c.classes) {
    if (cls.size() != leftover.size()) continue;
    try {
      if (graph_code(edge_subgraph(cls), kVerifyComponentCap) ==
          graph_code(edge_subgraph(leftover), kVerifyComponentCap)) {
        collides = true;
      }
    } catch (const std::domain_error&) {
      collides = true;  // cannot tell them apart
    }
    if (collides) break;
  }
  if (!collides) {
    c.classes.push_back(std::move(leftover));
    c.labels.emplace_back(LeftoverLabel{});
    return;
  }
  // The merged class is strictly larger than every other class.
  const auto largest = static_cast<std::size_t>(
      std::max_element(c.classes.begin(), c.classes.end(),
                       [](const auto& a, const auto& b) { return a.size() < b.size(); }) -
      c.classes.begin());
  auto& target = c.classes[largest];
  target.insert(target.end(), leftover.begin(), leftover.end());
  if (const auto* census = std::get_if<CensusLabel>(&c.labels[largest])) {
    if (auto counts = path_vector(target, census->counts.size())) {
      c.labels[largest] = CensusLabel{std::move(*counts)};
      return;
    }
  }
  c.labels[largest] = LeftoverLabel{};
}

std::uint64_t tau_matching(std::uint64_t m) {
  std::uint64_t t = 0;
  while ((t + 1) * (t + 2) / 2 <= m) ++t;
  return t;
}

namespace {

class TauSearch {
 public:
  explicit TauSearch(const Graph& g) : m_(g.size()) {
    const auto edges = g.edges();
    const std::size_t masks = std::size_t{1} << m_;
    code_id_.assign(masks, 0);
    std::unordered_map<CanonicalCode, std::uint32_t, CanonicalCodeHash> ids;
    std::vector<std::unordered_set<std::uint32_t>> types(m_ + 1);
    for (std::size_t mask = 1; mask < masks; ++mask) {
      std::vector<Edge> part;
      for (std::size_t i = 0; i < m_; ++i) {
        if (mask >> i & 1U) part.push_back(edges[i]);
      }
      auto code = graph_code(edge_subgraph(part), m_ + 1);
      auto [it, fresh] = ids.try_emplace(std::move(code), static_cast<std::uint32_t>(ids.size()));
      code_id_[mask] = it->second;
      types[part.size()].insert(it->second);
    }
    types_of_size_.resize(m_ + 1);
    for (std::size_t s = 0; s <= m_; ++s) types_of_size_[s] = types[s].size();
  }

  std::size_t run() {
    if (m_ == 0) return 0;
    blocks_.clear();
    assign(0);
    return best_;
  }

 private:
  // Restricted growth: edge i joins an existing block or opens a new one.
  void assign(std::size_t i) {
    if (blocks_.size() + (m_ - i) <= best_) return;
    if (i == m_) {
      if (valid()) best_ = blocks_.size();
      return;
    }
    const std::uint32_t bit = 1U << i;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      blocks_[b] |= bit;
      assign(i + 1);
      blocks_[b] &= ~bit;
    }
    blocks_.push_back(bit);
    assign(i + 1);
    blocks_.pop_back();
  }

  bool valid() const {
    std::vector<std::size_t> per_size(m_ + 1, 0);
    for (std::uint32_t b : blocks_) {
      const auto s = static_cast<std::size_t>(std::popcount(b));
      if (++per_size[s] > types_of_size_[s]) return false;
    }
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t b : blocks_) {
      if (!seen.insert(code_id_[b]).second) return false;
    }
    return true;
  }

  std::size_t m_;
  std::vector<std::uint32_t> code_id_;
  std::vector<std::size_t> types_of_size_;
  std::vector<std::uint32_t> blocks_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t tau_exact(const Graph& g) {
  if (g.size() > kTauExactMaxEdges) {
    throw std::invalid_argument("tau_exact: " + std::to_string(g.size()) + " edges exceeds cap " +
                                std::to_string(kTauExactMaxEdges));
  }
  return TauSearch(g).run();
}

}  // namespace taulab
