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

#ifndef HPCENERGY_SIMULATOR_HPP_
#define HPCENERGY_SIMULATOR_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpcenergy/emissions.hpp"
#include "hpcenergy/freq_policy.hpp"
#include "hpcenergy/power_model.hpp"
#include "hpcenergy/timestamp.hpp"

namespace hpcenergy::sim {

/// Calibrated WholeDraw factor for the performance-determinism BIOS mode.
inline constexpr double kBiosPerformanceDeterminismFactor = 0.935;

/// Fraction of compute node-hours per application; sums to 1 within 1e-9.
struct JobMix {
  std::map<std::string, double> entries;

  void validate() const;
};

struct ScenarioConfig {
  power::SystemModel model;
  double utilization = 1.0;
  JobMix mix;
  std::vector<policy::AppBenchmark> benchmarks;
  /// Empty means no frequency policy: the compute component is left as is.
  std::optional<policy::PolicyRule> rule;
  double bios_factor = 1.0;
  double duration_hours = 1.0;
  Timestamp start = 0;
  emissions::CarbonIntensityProfile carbon =
      emissions::CarbonIntensityProfile::constant(0.0);
  std::optional<emissions::EmbodiedEmissions> embodied;

  void validate() const;
};

struct ScenarioResult {
  double duration_hours = 0.0;
  double mean_power_kw = 0.0;
  power::PowerBreakdown breakdown;
  double energy_kwh = 0.0;
  emissions::EmissionsBreakdown emissions;
  double fleet_power_ratio = 1.0;
  double throughput_index = 1.0;
  std::vector<policy::PolicyDecision> decisions;
  std::vector<std::string> warnings;

  bool operator==(const ScenarioResult&) const = default;
};

struct ScenarioDelta {
  double power_kw = 0.0;
  double pct_power = 0.0;  // fraction of a's mean power
  double energy_kwh = 0.0;
  double emissions_kg = 0.0;
  double throughput = 0.0;
};

struct SweepPoint {
  double threshold = 0.0;
  ScenarioResult result;
};

ScenarioResult run_scenario(const ScenarioConfig& config);

/// b - a componentwise. Throws Domain when durations differ.
ScenarioDelta compare_scenarios(const ScenarioResult& a,
                                const ScenarioResult& b);

/// One run per threshold with everything else fixed, sorted by threshold.
std::vector<SweepPoint> sweep_threshold(const ScenarioConfig& config,
                                        std::vector<double> thresholds);

}  // namespace hpcenergy::sim

#endif  // HPCENERGY_SIMULATOR_HPP_
