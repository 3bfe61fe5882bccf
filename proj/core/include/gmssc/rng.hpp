#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace gmssc {

// splitmix64 (Steele, Lea and Flood; the java.util.SplittableRandom mixer).
// Every random draw in the toolkit flows through this generator so results
// are bit-reproducible across platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Stateless finalizer used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fisher-Yates shuffle of items[first, last), deterministic under rng.
template <typename T>
void shuffle_range(std::vector<T>& items, std::size_t first, std::size_t last,
                   SplitMix64& rng) {
  for (std::size_t len = last - first; len > 1; --len) {
    std::size_t j = static_cast<std::size_t>(rng.below(len));
    std::swap(items[first + len - 1], items[first + j]);
  }
}

}  // namespace gmssc
