#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tb::abr {

struct TracePoint {
  double time_s = 0.0;
  double mbps = 0.0;
  bool operator==(const TracePoint&) const = default;
};

// Piecewise-constant bandwidth series. Sample i holds over
// [t_i, t_{i+1}); the final sample holds for the preceding interval length
// (or 1 s for a single-sample trace). Lookups past the end wrap circularly,
// so a trace behaves as a periodic function with period span().
struct BandwidthTrace {
  std::vector<TracePoint> samples;

  // Throws ValidationError unless timestamps strictly increase and every
  // bandwidth is > 0.
  void validate() const;

  double span() const;  // period of the wrapped function, seconds
  // Bandwidth at absolute time t >= 0 (wrapped). Intervals are left-closed.
  double value_at(double t) const;
  // Time needed to move `mbit` through the link starting at time t0.
  double time_to_transfer(double t0, double mbit) const;

  double mean() const;
  double variance() const;
  // Coefficient of variation: stddev / mean (duration-weighted).
  double cv() const;

  bool operator==(const BandwidthTrace&) const = default;
};

// Two-column text rows "<seconds> <Mbps>"; '#' starts a comment line. This is
// the on-disk format shared by bandwidth and bottleneck-capacity traces.
BandwidthTrace load_trace(const std::string& path);
void save_trace(const BandwidthTrace& trace, const std::string& path);

// Sinusoid-plus-noise synthetic trace sampled at 1 Hz. Noise is uniform in
// [-noise, +noise] so positivity is guaranteed by the parameter check
// mean - amplitude - noise > 0 (violations throw ValidationError).
BandwidthTrace gen_synth_trace(double mean_mbps, double amplitude_mbps, double period_s,
                               double noise_mbps, double duration_s, std::uint64_t seed);

// Broadband-measurement-style trace: piecewise levels with exponential dwell
// times and mild jitter. Lower dispersion than the synthetic family.
BandwidthTrace gen_measured_trace(std::uint64_t seed, double duration_s = 400.0);

}  // namespace tb::abr
