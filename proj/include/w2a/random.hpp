// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace w2a {

/// Deterministic pseudo-random substream.
///
/// xoshiro256++ seeded through SplitMix64 from a (seed, stream_index)
/// pair. The same pair yields the same sequence on every platform and
/// for every worker layout, which is what makes parallel Monte Carlo
/// runs reproducible: give each trial (or each worker partition) its
/// own stream_index and the merged results cannot depend on scheduling.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0)
      : seed_(seed), stream_index_(stream_index) {
    std::uint64_t h = seed;
    std::uint64_t a = splitmix_next(h);
    // Weyl-stride the stream index, then scramble again so that
    // neighbouring indices land on uncorrelated states.
    std::uint64_t t = a ^ (stream_index * 0x9E3779B97F4A7C15ull);
    for (auto& w : state_) w = splitmix_next(t);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform draw strictly inside (0,1): 53 significant bits, offset by
  /// half an ulp so neither endpoint can ever be returned.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix_next(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_[4];
};

}  // namespace w2a
