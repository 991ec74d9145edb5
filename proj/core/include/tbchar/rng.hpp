#pragma once

#include <cstdint>

namespace tbchar {

// Deterministic 64-bit generator (splitmix64).  std::mt19937_64 would do for
// raw bits, but std::uniform_int_distribution is implementation-defined, and
// seeded runs must be byte-identical everywhere, so the whole pipeline is
// pinned down here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi], both ends included.  Rejection sampling, so
  // no modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
  }

  bool coin() { return (next() >> 63) != 0; }

  // Independent substream for sample `index` under a top-level seed.  Mixing
  // through one splitmix step keeps streams decorrelated even for adjacent
  // indices.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    return Rng(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace tbchar
