#include "taulab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace taulab {

std::size_t LinearForest::parameter() const noexcept {
  return std::accumulate(path_lengths.begin(), path_lengths.end(), std::size_t{0});
}

PartitionGenerator::PartitionGenerator(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("PartitionGenerator: k must be positive");
  current_.push_back(k);
}

std::optional<LinearForest> PartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return LinearForest{current_};
  }
  std::uint32_t ones = 0;
  while (!current_.empty() && current_.back() == 1) {
    ++ones;
    current_.pop_back();
  }
  if (current_.empty()) {
    done_ = true;
    return std::nullopt;
  }
  const std::uint32_t x = --current_.back();
  std::uint32_t rem = ones + 1;
  while (rem > x) {
    current_.push_back(x);
    rem -= x;
  }
  if (rem > 0) current_.push_back(rem);
  return LinearForest{current_};
}

std::vector<LinearForest> partitions(std::uint32_t k) {
  std::vector<LinearForest> out;
  PartitionGenerator gen(k);
  while (auto f = gen.next()) out.push_back(std::move(*f));
  return out;
}

std::vector<BigInt> partition_counts(std::uint32_t k) {
  std::vector<BigInt> p(k + 1);
  p[0] = 1;
  for (std::int64_t n = 1; n <= k; ++n) {
    BigInt sum = 0;
    for (std::int64_t j = 1;; ++j) {
      const std::int64_t g1 = j * (3 * j - 1) / 2;
      if (g1 > n) break;
      const std::int64_t g2 = j * (3 * j + 1) / 2;
      BigInt term = p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
      if (j % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[static_cast<std::size_t>(n)] = std::move(sum);
  }
  return p;
}

BigInt partition_count(std::uint32_t k) {
  if (k == 0) throw std::invalid_argument("partition_count: k must be positive");
  return partition_counts(k).back();
}

CanonicalCode forest_code(const LinearForest& f) {
  std::vector<std::uint32_t> lengths = f.path_lengths;
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  std::string s = "L";
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i > 0) s.push_back(',');
    s += std::to_string(lengths[i]);
  }
  return CanonicalCode{std::move(s)};
}

Graph realize(const LinearForest& f) {
  std::vector<Edge> edges;
  Vertex next = 0;
  for (std::uint32_t len : f.path_lengths) {
    for (std::uint32_t i = 0; i < len; ++i) edges.push_back({next + i, next + i + 1});
    next += len + 1;
  }
  return Graph(next, std::move(edges));
}

}  // namespace taulab
