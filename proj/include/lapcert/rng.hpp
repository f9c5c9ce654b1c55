#pragma once

#include <cstdint>
#include <random>

#include "lapcert/vertex_set.hpp"

namespace lapcert {

// Deterministic randomness. mt19937_64's output sequence is pinned by the
// standard; we avoid std distributions (whose algorithms are not) so that
// seeded runs are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do { x = eng_(); } while (x >= limit);
    return x % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_unit() < p; }

  // Each vertex independently with probability 1/2.
  VertexSet next_subset(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words()) w = eng_();
    s.mask_tail();
    return s;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[next_below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

// SplitMix64 step, used to derive independent per-item seeds from one
// global seed without correlating the streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (item + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace lapcert
