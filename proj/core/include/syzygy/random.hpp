#pragma once

#include <cstdint>
#include <random>

namespace syzygy {

/// Seeded generator threaded explicitly through every randomized routine.
/// There is no global generator anywhere in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::uint64_t next() { return engine_(); }

  /// Independent child generator; used to derive per-attempt streams.
  Rng fork() { return Rng(engine_()); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace syzygy
