#pragma once

#include <cstdint>
#include <random>

namespace mubenc {

/// splitmix64 finalizer; used to derive independent substream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// All randomness comes from std::mt19937_64, whose output sequence is fixed
/// by the standard. Trial i of a run seeded with s draws from
/// Rng(substream_seed(s, i)), so results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n) by rejection; portable across standard
  /// libraries, unlike std::uniform_int_distribution.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mubenc
