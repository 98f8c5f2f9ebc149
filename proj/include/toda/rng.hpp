#pragma once

#include <cstdint>

namespace toda {

/// Deterministic 64-bit generator (splitmix64).  Used instead of
/// <random> engines/distributions so that identical seeds give identical
/// instances on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant at
  /// the ranges used here and keeps the stream reproducible.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1ULL) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace toda
