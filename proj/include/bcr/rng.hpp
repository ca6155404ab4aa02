#ifndef BCR_RNG_HPP
#define BCR_RNG_HPP

#include <cstdint>

namespace bcr {

// SplitMix64: tiny, well-mixed, and — unlike std::uniform_int_distribution —
// bit-for-bit reproducible across standard libraries, which the seeded
// generators promise.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here; the
  // contract is determinism, not statistical perfection).
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

} // namespace bcr

#endif
