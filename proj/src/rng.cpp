#include "sytkit/rng.hpp"

namespace sytkit {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t x) {
  std::uint64_t state = x;
  return splitmix64(state);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::uint64_t state = seed + 0x9E3779B97F4A7C15ULL *
                                   (stream ^ 0xD1B54A32D192ED03ULL);
  for (auto& word : state_) word = splitmix64(state);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
    state_[0] = 0x9E3779B97F4A7C15ULL;  // all-zero state is the fixed point
}

std::uint64_t RandomSource::next() {
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  // Lemire multiply-reject: unbiased for every bound.
  std::uint64_t x = next();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = next();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

RandomSource RandomSource::substream(std::uint64_t index) const {
  return RandomSource(seed_,
                      mix64(stream_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace sytkit
