#pragma once

#include <cstdint>

namespace rankinv {

/// Counter-based generator: the i-th draw is a pure function of (seed, i),
/// so streams are reproducible across platforms and can be split by index.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0) : seed_(seed), counter_(counter) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    ++counter_;
    return mix(seed_ * 0xd1342543de82ef95ULL + counter_ * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform-ish value in [0, bound) by modular reduction (bias below 2^-40
  /// for every bound this library uses).
  std::uint64_t uniform(std::uint64_t bound) { return next() % bound; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace rankinv
