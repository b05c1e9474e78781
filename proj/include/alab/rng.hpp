#pragma once

#include <cstdint>
#include <span>

namespace alab {

// Counter-based splittable random stream.
//
// Every episode owns an independent stream derived from (master seed,
// stream index) through the splitmix64 finalizer, so serial and parallel
// runs of an experiment produce bit-identical results for a fixed seed.
// The generator itself is a splitmix64 walk; all sampling primitives are
// implemented here rather than with <random> distributions, whose output
// is not specified across standard library implementations.
class EpisodeRng {
 public:
  EpisodeRng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(seed ^ mix(0x632be59bd9b4e019ull * (stream + 1)))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform index in {0, ..., n-1}, unbiased via rejection.
  int uniform_index(int n) {
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t bound = ~0ull - ~0ull % un;
    std::uint64_t x = next_u64();
    while (x >= bound) x = next_u64();
    return static_cast<int>(x % un);
  }

  // Draw from a probability vector by CDF inversion. Floating-point
  // residue at the top of the CDF falls to the last positive entry.
  int sample_pmf(std::span<const double> pmf) {
    const double u = next_unit();
    double cdf = 0.0;
    int last_positive = 0;
    for (int i = 0; i < static_cast<int>(pmf.size()); ++i) {
      if (pmf[i] <= 0.0) continue;
      last_positive = i;
      cdf += pmf[i];
      if (u < cdf) return i;
    }
    return last_positive;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace alab
