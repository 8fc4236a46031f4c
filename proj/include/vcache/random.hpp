#pragma once

#include <cstdint>
#include <random>

namespace vcache {

/// Seeded pseudo-random source.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the
/// standard. Range reduction is done here rather than through
/// std::uniform_int_distribution, which differs between standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Uniform index in [0, n). Throws ZeroRange when n == 0.
  std::uint64_t uniform_draw(std::uint64_t n);

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace vcache
