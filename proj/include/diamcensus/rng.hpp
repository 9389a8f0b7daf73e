#pragma once

#include <cstdint>

namespace diamcensus {

// Deterministic counter-based generator: the k-th output is
// mix64(seed + k * 0x9E3779B97F4A7C15), the splitmix64 construction. Same
// seed, same stream, on every platform; samplers record the algorithm
// identifier in their run configs.
class CounterRng {
 public:
  static constexpr const char* kAlgorithm = "splitmix64";

  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), unbiased via rejection. bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t cut = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x = next_u64();
    if (cut != 0)
      while (x >= 0 - cut) x = next_u64();
    return x % bound;
  }

  bool coin() { return (next_u64() >> 63) != 0; }

  // Independent stream for shard `index`, derived from this seed.
  static CounterRng shard(std::uint64_t seed, std::uint64_t index) {
    CounterRng base(seed + (index + 1) * 0xD1B54A32D192ED03ull);
    return CounterRng(base.next_u64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace diamcensus
