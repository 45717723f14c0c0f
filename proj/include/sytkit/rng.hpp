#pragma once

#include <cstdint>

namespace sytkit {

// Reproducible random source: xoshiro256** seeded through splitmix64 from a
// (seed, stream) pair. Identical (seed, stream) always produces the identical
// output sequence, on every platform; distinct streams give statistically
// independent sequences. substream(k) derives an independent child source,
// which is how batch samplers hand one source per sample index.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next();

  // Unbiased draw from [0, bound), bound >= 1 (Lemire multiply-reject).
  std::uint64_t below(std::uint64_t bound);

  RandomSource substream(std::uint64_t index) const;

 private:
  std::uint64_t state_[4];
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace sytkit
