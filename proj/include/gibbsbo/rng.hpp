#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace gibbsbo {

/// SplitMix64 (Steele, Lea, Flood). Used for seeding and for hashing
/// (seed, index) pairs into independent stream states.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0, satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// One independent random stream. Not shareable between threads; derive
/// one per sample index from a StreamFactory instead.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t key) : engine_(key) {}

  double normal() { return normal_(engine_); }
  /// Uniform on [0, 1).
  double uniform() { return uniform_(engine_); }
  std::uint64_t bits() { return engine_(); }
  /// Uniform integer on [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  Xoshiro256 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Counter-based stream derivation: stream(i) depends only on the master
/// seed, the tag path and i, so any worker schedule sees identical draws.
class StreamFactory {
 public:
  explicit StreamFactory(std::uint64_t seed) : seed_(seed), key_(mix(seed, 0x5EEDULL)) {}

  std::uint64_t seed() const { return seed_; }

  /// Child factory for an independent sub-experiment.
  StreamFactory substream(std::uint64_t tag) const {
    StreamFactory child(*this);
    child.key_ = mix(key_, tag ^ 0xA5A5A5A5A5A5A5A5ULL);
    return child;
  }

  RandomStream stream(std::uint64_t index) const {
    return RandomStream(mix(key_, index));
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 sm(a ^ (b * 0xD1B54A32D192ED03ULL));
    sm.next();
    return sm.next() ^ b;
  }

  std::uint64_t seed_;
  std::uint64_t key_;
};

}  // namespace gibbsbo
