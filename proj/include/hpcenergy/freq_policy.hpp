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

#ifndef HPCENERGY_FREQ_POLICY_HPP_
#define HPCENERGY_FREQ_POLICY_HPP_

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hpcenergy::policy {

enum class FrequencySetting { F1500, F2000, F2250Turbo };

enum class Intervention { BiosDeterminism, FreqCap2000 };

std::string_view to_string(FrequencySetting f);
std::string_view to_string(Intervention i);
/// Accepts the CSV spellings "bios_determinism" / "freq_cap_2000".
Intervention parse_intervention(std::string_view text);

/// Ratios measured for one application across an operating-point change.
/// perf_ratio is throughput after / before (> 1 means faster); energy_ratio is
/// energy to solution after / before.
struct AppBenchmark {
  std::string app_name;
  long nodes = 1;
  Intervention intervention = Intervention::FreqCap2000;
  double perf_ratio = 1.0;
  double energy_ratio = 1.0;

  void validate() const;

  bool operator==(const AppBenchmark&) const = default;
};

inline constexpr double kDefaultPerfLossThreshold = 0.10;

struct PolicyRule {
  double perf_loss_threshold = kDefaultPerfLossThreshold;

  void validate() const;
};

struct PolicyDecision {
  std::string app_name;
  FrequencySetting default_setting = FrequencySetting::F2000;
  bool reverted = false;
  double perf_loss = 0.0;
  double energy_saving = 0.0;

  bool operator==(const PolicyDecision&) const = default;
};

struct DerivedRatios {
  double perf_loss = 0.0;
  double energy_saving = 0.0;
  /// Average power after / before: energy_ratio * perf_ratio.
  double power_ratio = 1.0;
};

struct FleetRatios {
  double fleet_power_ratio = 1.0;
  double fleet_throughput_ratio = 1.0;
  std::vector<PolicyDecision> decisions;
};

DerivedRatios derived_ratios(const AppBenchmark& b);

/// Reverts to F2250Turbo iff perf_loss > threshold (strict). Throws Domain for
/// benchmarks that do not describe the 2.0 GHz cap.
PolicyDecision recommend(const AppBenchmark& b, const PolicyRule& rule);

/// Weighted fleet power/throughput ratios. Reverted apps contribute 1.0 to
/// both. Weights must be >= 0, sum to 1 within 1e-9, and name FreqCap2000
/// benchmarks. Decisions cover every FreqCap2000 benchmark, in table order.
FleetRatios fleet_ratios(const std::vector<AppBenchmark>& benchmarks,
                         const std::map<std::string, double>& weights,
                         const PolicyRule& rule);

/// Equal weight on every FreqCap2000 benchmark.
std::map<std::string, double> equal_weights(
    const std::vector<AppBenchmark>& benchmarks);

/// CSV: header `app_name,nodes,intervention,perf_ratio,energy_ratio`.
/// Malformed rows throw Parse naming the line; invariant violations and
/// duplicate (app, intervention) pairs throw Validation naming the line.
std::vector<AppBenchmark> read_benchmark_table(std::istream& in);
std::vector<AppBenchmark> load_benchmark_table(const std::string& path);

}  // namespace hpcenergy::policy

#endif  // HPCENERGY_FREQ_POLICY_HPP_
