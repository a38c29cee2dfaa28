#pragma once

#include <cstdint>

namespace tempweak {

// Counter-based generator in the splitmix64 family. Every output is a pure
// function of (seed, stream, counter), so independently keyed streams can be
// drawn from in parallel without shared state.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ mix(stream + 0x9E3779B97F4A7C15ull))) {}

  std::uint64_t next() {
    return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ull);
  }

  // Unbiased draw from [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t reject = (0 - bound) % bound;
    std::uint64_t r = next();
    while (r < reject) r = next();
    return r % bound;
  }

  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace tempweak
