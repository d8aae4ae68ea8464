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

#include "hpcenergy/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hpcenergy/error.hpp"

namespace hpcenergy::sim {

void JobMix::validate() const {
  double sum = 0.0;
  for (const auto& [app, w] : entries) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      fail(ErrorKind::Validation, "job mix weight for '" + app + "' must be >= 0");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "job mix weights sum to " << sum << ", expected 1";
    fail(ErrorKind::Validation, msg.str());
  }
}

void ScenarioConfig::validate() const {
  if (!(utilization >= 0.0 && utilization <= 1.0)) {
    std::ostringstream msg;
    msg << "utilization " << utilization << " outside [0, 1]";
    fail(ErrorKind::Domain, msg.str());
  }
  if (!(duration_hours > 0.0) || !std::isfinite(duration_hours)) {
    fail(ErrorKind::Domain, "duration_hours must be > 0");
  }
  if (!(bios_factor > 0.0) || !std::isfinite(bios_factor)) {
    fail(ErrorKind::Domain, "bios_factor must be > 0");
  }
  if (model.find(model.compute_component()) == nullptr) {
    fail(ErrorKind::Validation, "model has no compute component");
  }
  if (rule) {
    rule->validate();
    mix.validate();
  }
  if (embodied) embodied->validate();
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  config.validate();
  const auto& compute = config.model.compute_component();

  auto model = power::apply_power_factor(config.model, compute,
                                         config.bios_factor,
                                         power::FactorMode::WholeDraw);
  ScenarioResult r;
  r.duration_hours = config.duration_hours;
  if (config.rule) {
    auto fleet = policy::fleet_ratios(config.benchmarks, config.mix.entries,
                                      *config.rule);
    model = power::apply_power_factor(model, compute, fleet.fleet_power_ratio,
                                      power::FactorMode::DynamicOnly);
    r.fleet_power_ratio = fleet.fleet_power_ratio;
    r.throughput_index = fleet.fleet_throughput_ratio;
    r.decisions = std::move(fleet.decisions);
  }
  r.breakdown = power::system_power(model, config.utilization);
  r.mean_power_kw = r.breakdown.total_kw;
  r.energy_kwh = r.mean_power_kw * r.duration_hours;
  if (config.embodied) {
    r.emissions = emissions::lifetime_emissions(
        r.mean_power_kw, r.duration_hours, config.start, config.carbon,
        config.embodied);
  } else {
    r.emissions = emissions::operational_emissions(
        r.mean_power_kw, r.duration_hours, config.start, config.carbon);
    r.warnings.push_back(
        "embodied emissions not configured; scope3 reported as 0");
  }
  return r;
}

ScenarioDelta compare_scenarios(const ScenarioResult& a,
                                const ScenarioResult& b) {
  if (a.duration_hours != b.duration_hours) {
    std::ostringstream msg;
    msg << "cannot compare scenarios of different durations ("
        << a.duration_hours << " h vs " << b.duration_hours << " h)";
    fail(ErrorKind::Domain, msg.str());
  }
  ScenarioDelta d;
  d.power_kw = b.mean_power_kw - a.mean_power_kw;
  d.pct_power = a.mean_power_kw != 0.0 ? d.power_kw / a.mean_power_kw : 0.0;
  d.energy_kwh = b.energy_kwh - a.energy_kwh;
  d.emissions_kg = b.emissions.total_kg - a.emissions.total_kg;
  d.throughput = b.throughput_index - a.throughput_index;
  return d;
}

std::vector<SweepPoint> sweep_threshold(const ScenarioConfig& config,
                                        std::vector<double> thresholds) {
  for (double t : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) {
      std::ostringstream msg;
      msg << "sweep threshold " << t << " outside [0, 1]";
      fail(ErrorKind::Domain, msg.str());
    }
  }
  std::sort(thresholds.begin(), thresholds.end());
  std::vector<SweepPoint> out;
  out.reserve(thresholds.size());
  auto run = config;
  for (double t : thresholds) {
    run.rule = policy::PolicyRule{t};
    out.push_back({t, run_scenario(run)});
  }
  return out;
}

}  // namespace hpcenergy::sim
