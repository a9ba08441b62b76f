#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taulab/canonical.hpp"
#include "taulab/graph.hpp"

namespace taulab {

struct TreeLabel {
  CanonicalCode code;
  friend bool operator==(const TreeLabel&, const TreeLabel&) = default;
};
struct ForestLabel {
  CanonicalCode code;
  friend bool operator==(const ForestLabel&, const ForestLabel&) = default;
};
/// (t_2, ..., t_l): t_i isolated paths on i vertices.
struct CensusLabel {
  std::vector<std::uint32_t> counts;
  friend bool operator==(const CensusLabel&, const CensusLabel&) = default;
};
struct LeftoverLabel {
  friend bool operator==(const LeftoverLabel&, const LeftoverLabel&) = default;
};

using ClassLabel = std::variant<TreeLabel, ForestLabel, CensusLabel, LeftoverLabel>;

/// "tree <code>", "forest <code>", "census <t2>,<t3>,..." or "leftover".
std::string label_text(const ClassLabel& label);
/// Inverse of label_text; throws std::invalid_argument.
ClassLabel parse_label(const std::string& text);

/// Partition of E(host) into labeled classes.
struct Coloring {
  Graph host;
  std::vector<std::vector<Edge>> classes;
  std::vector<ClassLabel> labels;

  [[nodiscard]] std::size_t class_count() const noexcept { return classes.size(); }
};

/// True iff classes are nonempty, pairwise disjoint, labels parallel to
/// classes, and the union is exactly E(host).
bool is_partition(const Coloring& c);
/// Throws std::logic_error unless is_partition(c).
void check_partition(const Coloring& c);

/// Per-component vertex cap for exact canonicalization of cyclic
/// components during distinctness checks.
inline constexpr std::size_t kVerifyComponentCap = 10;

struct DistinctnessReport {
  bool distinct = true;
  std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Whether no two classes are isomorphic as graphs without isolated
/// vertices. Classes with distinct edge counts are never compared; equal
/// counts are compared through graph_code. Throws std::domain_error when a
/// class that needs comparing has a cyclic component above
/// kVerifyComponentCap vertices.
DistinctnessReport verify_distinct(const Coloring& c);

/// Appends `leftover` as one more class. If it is isomorphic to an
/// existing class (or cannot be told apart), it is merged into the class
/// with the most edges instead and that class is relabeled.
void attach_leftover(Coloring& c, std::vector<Edge> leftover);

/// Largest number of pairwise non-isomorphic parts over all partitions of
/// E(g). Exhaustive over set partitions; throws std::invalid_argument when
/// g has more than kTauExactMaxEdges edges. The empty graph gives 0.
inline constexpr std::size_t kTauExactMaxEdges = 8;
std::size_t tau_exact(const Graph& g);

/// Largest t with t(t+1)/2 <= m: classes of sizes 1, 2, ..., t in a
/// matching of m edges.
std::uint64_t tau_matching(std::uint64_t m);

}  // namespace taulab
