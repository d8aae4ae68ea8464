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

#include "hpcenergy/freq_policy.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "csv.hpp"
#include "hpcenergy/error.hpp"

namespace hpcenergy::policy {

namespace {

// Absolute slack on the strict revert comparison so that a perf ratio
// written as 0.90 is not reverted at threshold 0.10 through rounding.
constexpr double kCompareSlack = 1e-12;
constexpr double kWeightSumTolerance = 1e-9;

}  // namespace

std::string_view to_string(FrequencySetting f) {
  switch (f) {
    case FrequencySetting::F1500: return "1.5GHz";
    case FrequencySetting::F2000: return "2.0GHz";
    case FrequencySetting::F2250Turbo: return "2.25GHz+turbo";
  }
  return "?";
}

std::string_view to_string(Intervention i) {
  switch (i) {
    case Intervention::BiosDeterminism: return "bios_determinism";
    case Intervention::FreqCap2000: return "freq_cap_2000";
  }
  return "?";
}

Intervention parse_intervention(std::string_view text) {
  if (text == "bios_determinism") return Intervention::BiosDeterminism;
  if (text == "freq_cap_2000") return Intervention::FreqCap2000;
  fail(ErrorKind::Parse, "unknown intervention '" + std::string(text) + "'");
}

void AppBenchmark::validate() const {
  if (app_name.empty()) fail(ErrorKind::Validation, "empty app_name");
  if (nodes < 1) {
    fail(ErrorKind::Validation, app_name + ": nodes must be >= 1");
  }
  if (!(perf_ratio > 0.0) || !std::isfinite(perf_ratio)) {
    fail(ErrorKind::Validation, app_name + ": perf_ratio must be > 0");
  }
  if (!(energy_ratio > 0.0) || !std::isfinite(energy_ratio)) {
    fail(ErrorKind::Validation, app_name + ": energy_ratio must be > 0");
  }
}

void PolicyRule::validate() const {
  if (!(perf_loss_threshold >= 0.0 && perf_loss_threshold <= 1.0)) {
    std::ostringstream msg;
    msg << "perf loss threshold " << perf_loss_threshold << " outside [0, 1]";
    fail(ErrorKind::Domain, msg.str());
  }
}

DerivedRatios derived_ratios(const AppBenchmark& b) {
  b.validate();
  return {1.0 - b.perf_ratio, 1.0 - b.energy_ratio,
          b.energy_ratio * b.perf_ratio};
}

PolicyDecision recommend(const AppBenchmark& b, const PolicyRule& rule) {
  rule.validate();
  if (b.intervention != Intervention::FreqCap2000) {
    fail(ErrorKind::Domain, b.app_name + ": frequency policy needs a " +
                                "freq_cap_2000 benchmark, got " +
                                std::string(to_string(b.intervention)));
  }
  const auto r = derived_ratios(b);
  PolicyDecision d;
  d.app_name = b.app_name;
  d.perf_loss = r.perf_loss;
  d.energy_saving = r.energy_saving;
  d.reverted = r.perf_loss > rule.perf_loss_threshold + kCompareSlack;
  d.default_setting =
      d.reverted ? FrequencySetting::F2250Turbo : FrequencySetting::F2000;
  return d;
}

FleetRatios fleet_ratios(const std::vector<AppBenchmark>& benchmarks,
                         const std::map<std::string, double>& weights,
                         const PolicyRule& rule) {
  rule.validate();
  double sum = 0.0;
  for (const auto& [app, w] : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      fail(ErrorKind::Validation, "weight for '" + app + "' must be >= 0");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "weights sum to " << sum << ", expected 1";
    fail(ErrorKind::Validation, msg.str());
  }

  FleetRatios out;
  out.fleet_power_ratio = 0.0;
  out.fleet_throughput_ratio = 0.0;
  std::set<std::string> matched;
  for (const auto& b : benchmarks) {
    if (b.intervention != Intervention::FreqCap2000) continue;
    auto d = recommend(b, rule);
    auto w = weights.find(b.app_name);
    if (w != weights.end()) {
      matched.insert(b.app_name);
      const auto r = derived_ratios(b);
      out.fleet_power_ratio += w->second * (d.reverted ? 1.0 : r.power_ratio);
      out.fleet_throughput_ratio +=
          w->second * (d.reverted ? 1.0 : b.perf_ratio);
    }
    out.decisions.push_back(std::move(d));
  }
  for (const auto& [app, w] : weights) {
    if (!matched.contains(app)) {
      fail(ErrorKind::NotFound,
           "no freq_cap_2000 benchmark for app '" + app + "'");
    }
  }
  return out;
}

std::map<std::string, double> equal_weights(
    const std::vector<AppBenchmark>& benchmarks) {
  std::vector<std::string> apps;
  for (const auto& b : benchmarks) {
    if (b.intervention == Intervention::FreqCap2000) apps.push_back(b.app_name);
  }
  std::map<std::string, double> out;
  for (const auto& a : apps) out[a] = 1.0 / static_cast<double>(apps.size());
  return out;
}

std::vector<AppBenchmark> read_benchmark_table(std::istream& in) {
  std::vector<AppBenchmark> out;
  std::set<std::pair<std::string, Intervention>> seen;
  csv::read(in,
            {"app_name", "nodes", "intervention", "perf_ratio", "energy_ratio"},
            [&](const std::vector<std::string>& f, std::size_t lineno) {
              AppBenchmark b;
              b.app_name = f[0];
              b.nodes = csv::to_long(f[1], lineno, "nodes");
              try {
                b.intervention = parse_intervention(f[2]);
              } catch (const Error& e) {
                fail(ErrorKind::Parse,
                     "line " + std::to_string(lineno) + ": " + e.what());
              }
              b.perf_ratio = csv::to_double(f[3], lineno, "perf_ratio");
              b.energy_ratio = csv::to_double(f[4], lineno, "energy_ratio");
              try {
                b.validate();
              } catch (const Error& e) {
                fail(ErrorKind::Validation,
                     "line " + std::to_string(lineno) + ": " + e.what());
              }
              if (!seen.emplace(b.app_name, b.intervention).second) {
                fail(ErrorKind::Validation,
                     "line " + std::to_string(lineno) + ": duplicate entry for '" +
                         b.app_name + "' / " +
                         std::string(to_string(b.intervention)));
              }
              out.push_back(std::move(b));
            });
  return out;
}

std::vector<AppBenchmark> load_benchmark_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open benchmark table '" + path + "'");
  return read_benchmark_table(in);
}

}  // namespace hpcenergy::policy
