#pragma once

#include <cstdint>
#include <random>

namespace ordsym {

// Mixes a user seed with stream/substream indices so that workers and
// replicates get independent, reproducible generators.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

// Standard normal CDF, survival function and quantile. The quantile is a
// rational approximation refined by one Halley step (|error| < 1e-9, in
// practice near machine precision away from the extreme tails).
double normal_cdf(double z);
double normal_sf(double z);
double inverse_normal_cdf(double p);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() { return inverse_normal_cdf(uniform()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ordsym
