#include "taulab/rooted_binary.hpp"

#include <stdexcept>
#include <string>

namespace taulab {

Graph RootedBinaryTree::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(nodes_.empty() ? 0 : nodes_.size() - 1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto v = static_cast<Vertex>(i);
    if (nodes_[i].left != kNoChild) edges.push_back(make_edge(v, static_cast<Vertex>(nodes_[i].left)));
    if (nodes_[i].right != kNoChild) edges.push_back(make_edge(v, static_cast<Vertex>(nodes_[i].right)));
  }
  return Graph(nodes_.size(), std::move(edges));
}

BigInt catalan(std::uint64_t t) {
  if (t == 0) throw std::invalid_argument("catalan: t must be positive");
  return binomial(2 * t, t) / (t + 1);
}

namespace {

using Node = RootedBinaryTree::Node;

class Enumerator {
 public:
  explicit Enumerator(const std::function<void(const RootedBinaryTree&)>& visit) : visit_(visit) {}

  void run(int t) {
    gen(t, [&] {
      tree_ = RootedBinaryTree(buf_);
      visit_(tree_);
    });
  }

 private:
  // Appends every subtree shape of `size` nodes at the end of buf_, calling
  // k() once per shape; buf_ is restored on return.
  void gen(int size, const std::function<void()>& k) {
    if (size == 0) {
      k();
      return;
    }
    const auto idx = static_cast<std::int32_t>(buf_.size());
    buf_.push_back({});
    for (int l = 0; l < size; ++l) {
      const int r = size - 1 - l;
      gen(l, [&] {
        buf_[idx].left = l > 0 ? idx + 1 : RootedBinaryTree::kNoChild;
        const auto rstart = static_cast<std::int32_t>(buf_.size());
        gen(r, [&] {
          buf_[idx].right = r > 0 ? rstart : RootedBinaryTree::kNoChild;
          k();
        });
      });
    }
    buf_.pop_back();
  }

  const std::function<void(const RootedBinaryTree&)>& visit_;
  std::vector<Node> buf_;
  RootedBinaryTree tree_;
};

std::vector<BigInt> catalan_table(std::size_t t) {
  std::vector<BigInt> c(t + 1);
  c[0] = 1;
  for (std::size_t i = 0; i < t; ++i) c[i + 1] = c[i] * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::int32_t unrank_into(std::size_t size, BigInt rank, const std::vector<BigInt>& cat,
                         std::vector<Node>& buf) {
  if (size == 0) return RootedBinaryTree::kNoChild;
  const auto idx = static_cast<std::int32_t>(buf.size());
  buf.push_back({});
  for (std::size_t l = 0; l < size; ++l) {
    const std::size_t r = size - 1 - l;
    const BigInt weight = cat[l] * cat[r];
    if (rank < weight) {
      const BigInt left_rank = rank / cat[r];
      const BigInt right_rank = rank % cat[r];
      const std::int32_t left = unrank_into(l, left_rank, cat, buf);
      buf[idx].left = left;
      const std::int32_t right = unrank_into(r, right_rank, cat, buf);
      buf[idx].right = right;
      return idx;
    }
    rank -= weight;
  }
  throw std::out_of_range("unrank_rooted_binary: rank exceeds catalan(t)");
}

}  // namespace

void for_each_rooted_binary(std::size_t t, const std::function<void(const RootedBinaryTree&)>& visit) {
  if (t == 0 || t > kRootedBinaryEnumerationCap) {
    throw std::invalid_argument("for_each_rooted_binary: t=" + std::to_string(t) +
                                " outside [1, " + std::to_string(kRootedBinaryEnumerationCap) +
                                "]; use sample_rooted_binary");
  }
  Enumerator(visit).run(static_cast<int>(t));
}

std::vector<RootedBinaryTree> enumerate_rooted_binary(std::size_t t) {
  std::vector<RootedBinaryTree> out;
  for_each_rooted_binary(t, [&](const RootedBinaryTree& tree) { out.push_back(tree); });
  return out;
}

RootedBinaryTree unrank_rooted_binary(std::size_t t, BigInt rank) {
  if (t == 0) throw std::invalid_argument("unrank_rooted_binary: t must be positive");
  const auto cat = catalan_table(t);
  if (rank < 0 || rank >= cat[t]) throw std::out_of_range("unrank_rooted_binary: rank out of range");
  std::vector<Node> buf;
  buf.reserve(t);
  unrank_into(t, std::move(rank), cat, buf);
  return RootedBinaryTree(std::move(buf));
}

RootedBinaryTree sample_rooted_binary(std::size_t t, CounterRng& rng) {
  if (t == 0) throw std::invalid_argument("sample_rooted_binary: t must be positive");
  return unrank_rooted_binary(t, uniform_below(catalan(t), rng));
}

}  // namespace taulab
