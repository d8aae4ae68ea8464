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

#include "hpcenergy/telemetry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "csv.hpp"
#include "hpcenergy/error.hpp"

namespace hpcenergy::telemetry {

PowerSeries::PowerSeries(std::vector<Sample> samples)
    : samples_(std::move(samples)) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.power_kw) || s.power_kw < 0.0) {
      fail(ErrorKind::Validation, "sample " + std::to_string(i) + " at " +
                                      format_timestamp(s.time) +
                                      ": power must be finite and >= 0");
    }
    if (i > 0 && s.time <= samples_[i - 1].time) {
      fail(ErrorKind::Validation,
           "timestamps not strictly increasing: " +
               format_timestamp(samples_[i - 1].time) + " then " +
               format_timestamp(s.time));
    }
  }
}

PowerSeries read_series(std::istream& in) {
  std::vector<Sample> samples;
  csv::read(in, {"timestamp", "power_kw"},
            [&](const std::vector<std::string>& f, std::size_t lineno) {
              Sample s;
              try {
                s.time = parse_timestamp(f[0]);
              } catch (const Error& e) {
                fail(ErrorKind::Parse,
                     "line " + std::to_string(lineno) + ": " + e.what());
              }
              s.power_kw = csv::to_double(f[1], lineno, "power_kw");
              const auto where = "line " + std::to_string(lineno) + ": ";
              if (!std::isfinite(s.power_kw) || s.power_kw < 0.0) {
                fail(ErrorKind::Validation,
                     where + "power_kw must be finite and >= 0");
              }
              if (!samples.empty() && s.time <= samples.back().time) {
                fail(ErrorKind::Validation,
                     where + "timestamps out of order: " +
                         format_timestamp(samples.back().time) + " then " +
                         format_timestamp(s.time));
              }
              samples.push_back(s);
            });
  return PowerSeries(std::move(samples));
}

PowerSeries parse_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open series '" + path + "'");
  return read_series(in);
}

void write_series(std::ostream& out, const PowerSeries& series) {
  out << "timestamp,power_kw\n";
  char buf[64];
  for (const auto& s : series.samples()) {
    std::snprintf(buf, sizeof(buf), "%.3f", s.power_kw);
    out << format_timestamp(s.time) << ',' << buf << '\n';
  }
}

WindowStats window_mean(const PowerSeries& series, Timestamp start,
                        Timestamp end) {
  const auto& v = series.samples();
  const auto by_time = [](const Sample& s, Timestamp t) { return s.time < t; };
  const auto first = std::lower_bound(v.begin(), v.end(), start, by_time);
  const auto last = std::lower_bound(first, v.end(), end, by_time);
  if (first == last) {
    fail(ErrorKind::Domain, "window [" + format_timestamp(start) + ", " +
                                format_timestamp(end) + ") holds no samples");
  }
  WindowStats w;
  w.start = start;
  w.end = end;
  w.count = static_cast<std::size_t>(last - first);
  double sum = 0.0;
  for (auto it = first; it != last; ++it) sum += it->power_kw;
  w.mean_kw = sum / static_cast<double>(w.count);
  double ss = 0.0;
  for (auto it = first; it != last; ++it) {
    const double d = it->power_kw - w.mean_kw;
    ss += d * d;
  }
  w.stddev_kw = std::sqrt(ss / static_cast<double>(w.count));
  return w;
}

InterventionReport intervention_impact(const PowerSeries& series,
                                       Timestamp change_time,
                                       std::int64_t guard_gap_seconds) {
  if (guard_gap_seconds < 0) fail(ErrorKind::Domain, "guard gap must be >= 0");
  if (series.empty()) fail(ErrorKind::Domain, "series is empty");
  const auto& v = series.samples();
  InterventionReport r;
  r.change_time = change_time;
  try {
    r.before = window_mean(series, v.front().time,
                           change_time - guard_gap_seconds);
    r.after = window_mean(series, change_time + guard_gap_seconds,
                          v.back().time + 1);
  } catch (const Error&) {
    fail(ErrorKind::Domain,
         "not enough samples on both sides of " +
             format_timestamp(change_time) + " with a guard gap of " +
             std::to_string(guard_gap_seconds) + " s");
  }
  r.delta_kw = r.after.mean_kw - r.before.mean_kw;
  r.pct_change = r.before.mean_kw != 0.0 ? r.delta_kw / r.before.mean_kw : 0.0;
  return r;
}

Changepoint detect_changepoint(const PowerSeries& series) {
  const auto& v = series.samples();
  const std::size_t n = v.size();
  if (n < 4) {
    fail(ErrorKind::Domain, "changepoint detection needs at least 4 samples, got " +
                                std::to_string(n));
  }
  // Center first so prefix sums of squares stay well conditioned.
  double mean = 0.0;
  for (const auto& s : v) mean += s.power_kw;
  mean /= static_cast<double>(n);
  std::vector<double> csum(n + 1, 0.0), csq(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = v[i].power_kw - mean;
    csum[i + 1] = csum[i] + x;
    csq[i + 1] = csq[i] + x * x;
  }
  const auto sse = [&](std::size_t a, std::size_t b) {
    const double s = csum[b] - csum[a];
    const double q = csq[b] - csq[a];
    return std::max(0.0, q - s * s / static_cast<double>(b - a));
  };
  const double total = sse(0, n);
  Changepoint best;
  double best_sse = std::numeric_limits<double>::infinity();
  for (std::size_t k = 2; k + 2 <= n; ++k) {
    const double split = sse(0, k) + sse(k, n);
    // Rounding noise must not break the earliest-index tie-break.
    if (split < best_sse - 1e-12 * std::max(1.0, total)) {
      best_sse = split;
      best.index = k;
    }
  }
  best.change_time = v[best.index].time;
  best.score = total > 0.0 ? std::clamp(1.0 - best_sse / total, 0.0, 1.0) : 0.0;
  return best;
}

PowerSeries synth_series(std::span<const Segment> segments, std::uint64_t seed,
                         Timestamp start) {
  std::mt19937_64 rng(seed);
  std::vector<Sample> out;
  double segment_start = static_cast<double>(start);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto& seg = segments[i];
    const auto where = "segment " + std::to_string(i) + ": ";
    if (seg.n_samples < 1) fail(ErrorKind::Domain, where + "n_samples must be >= 1");
    if (!(seg.noise_sd_kw >= 0.0) || !std::isfinite(seg.noise_sd_kw)) {
      fail(ErrorKind::Domain, where + "noise sd must be >= 0");
    }
    if (!(seg.mean_kw >= 0.0) || !std::isfinite(seg.mean_kw)) {
      fail(ErrorKind::Domain, where + "mean must be >= 0");
    }
    if (!(seg.duration_seconds >= static_cast<double>(seg.n_samples))) {
      fail(ErrorKind::Domain,
           where + "duration too short for one sample per second");
    }
    std::normal_distribution<double> noise(0.0, 1.0);
    const double cadence = seg.duration_seconds / static_cast<double>(seg.n_samples);
    for (std::size_t j = 0; j < seg.n_samples; ++j) {
      const double eps = noise(rng);
      const auto t = static_cast<Timestamp>(
          std::floor(segment_start + static_cast<double>(j) * cadence));
      out.push_back({t, std::max(0.0, seg.mean_kw + seg.noise_sd_kw * eps)});
    }
    segment_start += seg.duration_seconds;
  }
  return PowerSeries(std::move(out));
}

}  // namespace hpcenergy::telemetry
