#pragma once

#include <cstdint>

namespace treelap {

// SplitMix64 (Steele/Lea/Flood mixing constants). Chosen over <random> engines
// because the standard distributions are implementation-defined: two platforms
// seeded identically may disagree. This generator plus plain modulo reduction
// gives bit-identical streams everywhere, which the seeded generators and the
// randomized test harness rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound). Modulo bias is below 2^-50 for any bound
  // that fits in 13 bits and irrelevant for tree sizes; determinism matters
  // more here than removing it.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Draw in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Stable per-item seed derivation so batched work can be parallelized without
// sharing a stream: item i of a run seeded with s draws from splitmix(s ^ mix(i)).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  SplitMix64 g(base ^ (0x51ed2701all * (index + 1)));
  return g.next();
}

}  // namespace treelap
