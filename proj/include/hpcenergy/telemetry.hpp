// Copyright 2026 The hpcenergy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HPCENERGY_TELEMETRY_HPP_
#define HPCENERGY_TELEMETRY_HPP_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hpcenergy/timestamp.hpp"

namespace hpcenergy::telemetry {

struct Sample {
  Timestamp time = 0;
  double power_kw = 0.0;

  bool operator==(const Sample&) const = default;
};

/// Timestamped power samples, strictly increasing in time, finite and >= 0.
class PowerSeries {
 public:
  PowerSeries() = default;
  /// Throws Validation on ordering or value violations.
  explicit PowerSeries(std::vector<Sample> samples);

  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }

  bool operator==(const PowerSeries&) const = default;

 private:
  std::vector<Sample> samples_;
};

struct WindowStats {
  Timestamp start = 0;
  Timestamp end = 0;
  std::size_t count = 0;
  double mean_kw = 0.0;
  double stddev_kw = 0.0;  // population
};

struct InterventionReport {
  Timestamp change_time = 0;
  WindowStats before;
  WindowStats after;
  double delta_kw = 0.0;    // after.mean - before.mean
  double pct_change = 0.0;  // delta / before.mean, as a fraction
};

struct Changepoint {
  std::size_t index = 0;  // first sample of the second segment
  Timestamp change_time = 0;
  double score = 0.0;  // 1 - SSE(two segments) / SSE(one segment)
};

struct Segment {
  double duration_seconds = 0.0;
  std::size_t n_samples = 0;
  double mean_kw = 0.0;
  double noise_sd_kw = 0.0;
};

/// CSV `timestamp,power_kw`. Every error names its line number.
PowerSeries read_series(std::istream& in);
PowerSeries parse_series(const std::string& path);
void write_series(std::ostream& out, const PowerSeries& series);

/// Stats over samples in [start, end). Throws Domain for an empty window.
WindowStats window_mean(const PowerSeries& series, Timestamp start,
                        Timestamp end);

/// Before window [first sample, change - gap), after window
/// [change + gap, last sample]. Throws Domain if either side is empty.
InterventionReport intervention_impact(const PowerSeries& series,
                                       Timestamp change_time,
                                       std::int64_t guard_gap_seconds = 0);

/// Best two-segment piecewise-constant split by least squares; the earliest
/// minimizing index wins ties. Requires at least 4 samples.
Changepoint detect_changepoint(const PowerSeries& series);

/// Gaussian noise around each segment mean, clamped at 0. Segment i starts
/// where segment i-1 ends; sample j of a segment sits at
/// start + floor(j * duration / n). Deterministic for a given seed.
PowerSeries synth_series(std::span<const Segment> segments, std::uint64_t seed,
                         Timestamp start);

}  // namespace hpcenergy::telemetry

#endif  // HPCENERGY_TELEMETRY_HPP_
