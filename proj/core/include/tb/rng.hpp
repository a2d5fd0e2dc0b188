#pragma once

#include <cstdint>
#include <random>

namespace tb {

// Deterministic random source. std::mt19937_64 is fully specified by the
// standard; the distribution transforms are hand-rolled here because the
// std:: distributions are implementation-defined and would break
// reproducibility of recorded experiments across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi);

  // Standard normal via Box-Muller (spare value cached).
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Exponential with the given mean (> 0).
  double exponential(double mean);

  // Poisson count; Knuth's method, intended for small means.
  int poisson(double mean);

  // Derives an independent deterministic substream.
  Rng fork(std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tb
