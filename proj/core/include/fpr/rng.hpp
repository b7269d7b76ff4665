#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fpr {

/// SplitMix64 (Steele, Lea and Flood; the seeding generator of the xoshiro
/// family). Chosen because it is tiny, has 64-bit state and is trivial to
/// reproduce bit for bit in any language, which keeps seeded instances
/// portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound >= 1. Rejects the biased low range so the
  /// result is exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return (next() >> 63) != 0; }

  /// Fisher-Yates, last element first.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace fpr
