#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace revcat::util {

// Deterministic RNG. The mt19937_64 sequence is pinned by the standard, and
// every draw below avoids std::uniform_int_distribution (whose mapping is
// implementation-defined), so a seed reproduces the same run everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  // uniform-ish in [0, n); n == 0 returns 0
  size_t below(size_t n) { return n == 0 ? 0 : static_cast<size_t>(u64() % n); }

  bool chance(double p) { return (u64() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace revcat::util
