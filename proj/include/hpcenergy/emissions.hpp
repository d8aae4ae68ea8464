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

#ifndef HPCENERGY_EMISSIONS_HPP_
#define HPCENERGY_EMISSIONS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hpcenergy/timestamp.hpp"

namespace hpcenergy::emissions {

/// Carbon intensity below this (gCO2/kWh) leaves embodied emissions dominant.
inline constexpr double kLowIntensityLimit = 30.0;
/// Carbon intensity above this makes operational emissions dominant.
inline constexpr double kHighIntensityLimit = 100.0;

enum class Scenario { Scope3Dominated, Balanced, Scope2Dominated };

enum class Objective {
  MaximizeApplicationPerformance,
  BalancePerformanceAndEnergy,
  MaximizeEnergyEfficiency,
};

std::string_view to_string(Scenario s);
std::string_view to_string(Objective o);

/// Either a constant intensity or a step-hold series. A series value holds
/// from its timestamp until the next one; the last value holds indefinitely.
class CarbonIntensityProfile {
 public:
  static CarbonIntensityProfile constant(double g_per_kwh);
  /// Throws Validation on negative/non-finite values, an empty series or
  /// timestamps that are not strictly increasing.
  static CarbonIntensityProfile series(
      std::vector<std::pair<Timestamp, double>> points);

  bool is_constant() const { return points_.empty(); }
  double constant_value() const { return constant_; }
  const std::vector<std::pair<Timestamp, double>>& points() const {
    return points_;
  }

  /// Time-weighted mean intensity over [start, end). Throws Domain when
  /// end <= start and Coverage when start precedes the first series point.
  double mean_intensity(Timestamp start, Timestamp end) const;

 private:
  double constant_ = 0.0;
  std::vector<std::pair<Timestamp, double>> points_;
};

struct EmbodiedEmissions {
  double total_kgco2e = 0.0;
  double service_lifetime_hours = 0.0;

  /// Throws Validation unless total >= 0 and lifetime > 0.
  void validate() const;
};

struct EmissionsBreakdown {
  double scope2_kg = 0.0;
  double scope3_kg = 0.0;
  double total_kg = 0.0;

  bool operator==(const EmissionsBreakdown&) const = default;
};

struct IntervalEnergy {
  Timestamp start = 0;
  Timestamp end = 0;
  double kwh = 0.0;
};

struct OutputEfficiency {
  double per_nodeh = 0.0;
  double per_kwh = 0.0;
  double per_kgco2 = 0.0;
};

/// [0, 30) -> Scope3Dominated, [30, 100] -> Balanced, (100, inf) ->
/// Scope2Dominated. Throws Domain for negative or non-finite intensity.
Scenario classify_scenario(double g_per_kwh);

Objective recommended_objective(Scenario scenario);

/// Sum of kWh * intensity(interval) / 1000 in kg.
double scope2_emissions(std::span<const IntervalEnergy> intervals,
                        const CarbonIntensityProfile& profile);

/// Linear share total * duration / lifetime.
double amortized_scope3(const EmbodiedEmissions& embodied,
                        double duration_hours);

/// Scope 2 from mean_power_kw over [start, start + duration) plus the
/// amortized embodied share. Throws Validation if `embodied` is empty;
/// callers that accept a missing embodied figure must handle that
/// themselves rather than getting a silent zero.
EmissionsBreakdown lifetime_emissions(
    double mean_power_kw, double duration_hours, Timestamp start,
    const CarbonIntensityProfile& profile,
    const std::optional<EmbodiedEmissions>& embodied);

/// Scope 2 only, scope3 = 0. Used when no embodied figure is configured.
EmissionsBreakdown operational_emissions(double mean_power_kw,
                                         double duration_hours,
                                         Timestamp start,
                                         const CarbonIntensityProfile& profile);

OutputEfficiency output_efficiency(double output_units, double energy_kwh,
                                   double nodeh,
                                   const EmissionsBreakdown& breakdown);

}  // namespace hpcenergy::emissions

#endif  // HPCENERGY_EMISSIONS_HPP_
