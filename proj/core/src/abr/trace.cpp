#include "tb/abr/trace.hpp"

#include <cmath>
#include <fstream>

#include "tb/error.hpp"
#include "tb/rng.hpp"
#include "tb/text.hpp"

namespace tb::abr {
namespace {

// Duration of segment i (the final segment repeats the previous length).
double segment_duration(const std::vector<TracePoint>& s, size_t i) {
  if (i + 1 < s.size()) return s[i + 1].time_s - s[i].time_s;
  if (s.size() >= 2) return s[s.size() - 1].time_s - s[s.size() - 2].time_s;
  return 1.0;
}

}  // namespace

void BandwidthTrace::validate() const {
  if (samples.empty()) throw ValidationError("trace has no samples");
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& p : samples) {
    if (!std::isfinite(p.time_s) || !std::isfinite(p.mbps)) {
      throw ValidationError("non-finite trace sample");
    }
    if (p.time_s <= prev) throw ValidationError("trace timestamps must strictly increase");
    if (!(p.mbps > 0.0)) throw ValidationError("trace bandwidth must be > 0");
    prev = p.time_s;
  }
}

double BandwidthTrace::span() const {
  double total = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) total += segment_duration(samples, i);
  return total;
}

double BandwidthTrace::value_at(double t) const {
  if (samples.empty()) throw ValidationError("trace has no samples");
  const double period = span();
  double local = std::fmod(t - samples.front().time_s, period);
  if (local < 0) local += period;
  double offset = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double d = segment_duration(samples, i);
    if (local < offset + d) return samples[i].mbps;
    offset += d;
  }
  return samples.back().mbps;  // local == period boundary
}

double BandwidthTrace::time_to_transfer(double t0, double mbit) const {
  if (!(mbit > 0.0)) throw ValidationError("transfer size must be > 0");
  double remaining = mbit;
  double elapsed = 0.0;
  double t = t0;
  // March piecewise segments; all bandwidths are positive so this terminates.
  while (true) {
    const double bw = value_at(t);
    // Distance to the end of the current segment within the wrapped timeline.
    const double period = span();
    double local = std::fmod(t - samples.front().time_s, period);
    if (local < 0) local += period;
    double offset = 0.0;
    double seg_end = period;
    for (size_t i = 0; i < samples.size(); ++i) {
      const double d = segment_duration(samples, i);
      if (local < offset + d) {
        seg_end = offset + d;
        break;
      }
      offset += d;
    }
    const double seg_left = seg_end - local;
    const double capacity = bw * seg_left;
    if (capacity >= remaining) return elapsed + remaining / bw;
    remaining -= capacity;
    elapsed += seg_left;
    t += seg_left;
  }
}

double BandwidthTrace::mean() const {
  double num = 0.0;
  double den = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double d = segment_duration(samples, i);
    num += samples[i].mbps * d;
    den += d;
  }
  return num / den;
}

double BandwidthTrace::variance() const {
  const double m = mean();
  double num = 0.0;
  double den = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double d = segment_duration(samples, i);
    num += (samples[i].mbps - m) * (samples[i].mbps - m) * d;
    den += d;
  }
  return num / den;
}

double BandwidthTrace::cv() const { return std::sqrt(variance()) / mean(); }

BandwidthTrace load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trace '" + path + "'");
  BandwidthTrace trace;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::vector<std::string> cols = split_ws(t);
    if (cols.size() != 2) {
      throw IoError("'" + path + "' line " + std::to_string(line_no) +
                    ": expected two columns (seconds Mbps)");
    }
    try {
      trace.samples.push_back({parse_double(cols[0]), parse_double(cols[1])});
    } catch (const ValidationError& e) {
      throw IoError("'" + path + "' line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  try {
    trace.validate();
  } catch (const ValidationError& e) {
    throw IoError("'" + path + "': " + e.what());
  }
  return trace;
}

void save_trace(const BandwidthTrace& trace, const std::string& path) {
  trace.validate();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& p : trace.samples) {
    out << format_exact(p.time_s) << ' ' << format_exact(p.mbps) << '\n';
  }
  if (!out) throw IoError("write failed: '" + path + "'");
}

BandwidthTrace gen_synth_trace(double mean_mbps, double amplitude_mbps, double period_s,
                               double noise_mbps, double duration_s, std::uint64_t seed) {
  if (!(amplitude_mbps >= 0.0) || !(mean_mbps > amplitude_mbps)) {
    throw ValidationError("gen_synth_trace requires mean > amplitude >= 0");
  }
  if (!(noise_mbps >= 0.0)) throw ValidationError("noise must be >= 0");
  if (!(mean_mbps - amplitude_mbps - noise_mbps > 0.0)) {
    throw ValidationError("parameters admit non-positive bandwidth");
  }
  if (!(period_s > 0.0) || !(duration_s >= 1.0)) {
    throw ValidationError("period must be > 0 and duration >= 1");
  }
  Rng rng(seed);
  const double phase = rng.uniform(0.0, 2.0 * M_PI);
  BandwidthTrace trace;
  const int n = static_cast<int>(duration_s);
  for (int t = 0; t < n; ++t) {
    const double base = mean_mbps + amplitude_mbps * std::sin(2.0 * M_PI * t / period_s + phase);
    const double jitter = noise_mbps > 0.0 ? rng.uniform(-noise_mbps, noise_mbps) : 0.0;
    trace.samples.push_back({static_cast<double>(t), base + jitter});
  }
  trace.validate();
  return trace;
}

BandwidthTrace gen_measured_trace(std::uint64_t seed, double duration_s) {
  Rng rng(seed);
  BandwidthTrace trace;
  double t = 0.0;
  while (t < duration_s) {
    // Log-uniform level between 0.8 and 4.5 Mbps, held for an exponential
    // dwell, with +-5% per-second jitter.
    const double level = std::exp(rng.uniform(std::log(0.8), std::log(4.5)));
    const double dwell = std::min(std::max(2.0, rng.exponential(25.0)), duration_s - t);
    const int secs = std::max(1, static_cast<int>(dwell));
    for (int i = 0; i < secs && t < duration_s; ++i, t += 1.0) {
      trace.samples.push_back({t, level * rng.uniform(0.95, 1.05)});
    }
  }
  trace.validate();
  return trace;
}

}  // namespace tb::abr
