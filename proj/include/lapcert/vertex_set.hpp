#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace lapcert {

// Dense bitset over vertex labels 0..n-1. Membership is O(1); set algebra
// works word-wise so the subset statistics stay cheap on the whole corpus.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }

  VertexSet operator&(const VertexSet& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
  VertexSet operator|(const VertexSet& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
  VertexSet operator-(const VertexSet& o) const { return zip(o, [](auto a, auto b) { return a & ~b; }); }
  VertexSet complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.mask_tail();
    return r;
  }
  bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }
  void mask_tail() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  static VertexSet full(int universe) {
    VertexSet r(universe);
    for (auto& w : r.words_) w = ~std::uint64_t{0};
    r.mask_tail();
    return r;
  }
  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet r(universe);
    for (int v : vs) r.insert(v);
    return r;
  }

 private:
  template <typename F>
  VertexSet zip(const VertexSet& o, F f) const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
    return r;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace lapcert
