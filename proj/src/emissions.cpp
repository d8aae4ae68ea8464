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

#include "hpcenergy/emissions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hpcenergy/error.hpp"

namespace hpcenergy::emissions {

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Scope3Dominated: return "Scope3Dominated";
    case Scenario::Balanced: return "Balanced";
    case Scenario::Scope2Dominated: return "Scope2Dominated";
  }
  return "?";
}

std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::MaximizeApplicationPerformance:
      return "MaximizeApplicationPerformance";
    case Objective::BalancePerformanceAndEnergy:
      return "BalancePerformanceAndEnergy";
    case Objective::MaximizeEnergyEfficiency:
      return "MaximizeEnergyEfficiency";
  }
  return "?";
}

CarbonIntensityProfile CarbonIntensityProfile::constant(double g_per_kwh) {
  if (!std::isfinite(g_per_kwh) || g_per_kwh < 0.0) {
    fail(ErrorKind::Validation, "carbon intensity must be finite and >= 0");
  }
  CarbonIntensityProfile p;
  p.constant_ = g_per_kwh;
  return p;
}

CarbonIntensityProfile CarbonIntensityProfile::series(
    std::vector<std::pair<Timestamp, double>> points) {
  if (points.empty()) {
    fail(ErrorKind::Validation, "carbon intensity series is empty");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].second) || points[i].second < 0.0) {
      fail(ErrorKind::Validation, "carbon intensity at " +
                                      format_timestamp(points[i].first) +
                                      " must be finite and >= 0");
    }
    if (i > 0 && points[i].first <= points[i - 1].first) {
      fail(ErrorKind::Validation,
           "carbon intensity timestamps not strictly increasing: " +
               format_timestamp(points[i - 1].first) + " then " +
               format_timestamp(points[i].first));
    }
  }
  CarbonIntensityProfile p;
  p.points_ = std::move(points);
  return p;
}

double CarbonIntensityProfile::mean_intensity(Timestamp start,
                                              Timestamp end) const {
  if (end <= start) {
    fail(ErrorKind::Domain, "interval [" + format_timestamp(start) + ", " +
                                format_timestamp(end) + ") is empty");
  }
  if (is_constant()) return constant_;
  if (start < points_.front().first) {
    fail(ErrorKind::Coverage,
         "interval [" + format_timestamp(start) + ", " +
             format_timestamp(end) +
             ") starts before the carbon intensity series (" +
             format_timestamp(points_.front().first) + ")");
  }
  // Last point at or before start.
  auto it = std::upper_bound(
      points_.begin(), points_.end(), start,
      [](Timestamp t, const auto& p) { return t < p.first; });
  --it;
  double weighted = 0.0;
  Timestamp cursor = start;
  for (; it != points_.end() && cursor < end; ++it) {
    const auto next = it + 1;
    const Timestamp hold_end =
        next == points_.end() ? end : std::min(end, next->first);
    weighted += it->second * static_cast<double>(hold_end - cursor);
    cursor = hold_end;
  }
  return weighted / static_cast<double>(end - start);
}

void EmbodiedEmissions::validate() const {
  if (!std::isfinite(total_kgco2e) || total_kgco2e < 0.0) {
    fail(ErrorKind::Validation, "embodied total_kgco2e must be >= 0");
  }
  if (!std::isfinite(service_lifetime_hours) || service_lifetime_hours <= 0.0) {
    fail(ErrorKind::Domain, "embodied service_lifetime_hours must be > 0");
  }
}

Scenario classify_scenario(double g_per_kwh) {
  if (!std::isfinite(g_per_kwh) || g_per_kwh < 0.0) {
    std::ostringstream msg;
    msg << "carbon intensity " << g_per_kwh << " must be finite and >= 0";
    fail(ErrorKind::Domain, msg.str());
  }
  if (g_per_kwh < kLowIntensityLimit) return Scenario::Scope3Dominated;
  if (g_per_kwh <= kHighIntensityLimit) return Scenario::Balanced;
  return Scenario::Scope2Dominated;
}

Objective recommended_objective(Scenario scenario) {
  switch (scenario) {
    case Scenario::Scope3Dominated:
      return Objective::MaximizeApplicationPerformance;
    case Scenario::Balanced:
      return Objective::BalancePerformanceAndEnergy;
    case Scenario::Scope2Dominated:
      return Objective::MaximizeEnergyEfficiency;
  }
  return Objective::BalancePerformanceAndEnergy;
}

double scope2_emissions(std::span<const IntervalEnergy> intervals,
                        const CarbonIntensityProfile& profile) {
  double kg = 0.0;
  for (const auto& iv : intervals) {
    if (!std::isfinite(iv.kwh) || iv.kwh < 0.0) {
      fail(ErrorKind::Domain, "interval energy must be finite and >= 0");
    }
    const double intensity = profile.is_constant()
                                 ? profile.constant_value()
                                 : profile.mean_intensity(iv.start, iv.end);
    kg += iv.kwh * intensity / 1000.0;
  }
  return kg;
}

double amortized_scope3(const EmbodiedEmissions& embodied,
                        double duration_hours) {
  embodied.validate();
  if (!std::isfinite(duration_hours) || duration_hours < 0.0) {
    fail(ErrorKind::Domain, "duration must be >= 0 hours");
  }
  return embodied.total_kgco2e * duration_hours /
         embodied.service_lifetime_hours;
}

EmissionsBreakdown operational_emissions(double mean_power_kw,
                                         double duration_hours, Timestamp start,
                                         const CarbonIntensityProfile& profile) {
  if (!std::isfinite(mean_power_kw) || mean_power_kw < 0.0) {
    fail(ErrorKind::Domain, "mean power must be finite and >= 0");
  }
  if (!std::isfinite(duration_hours) || duration_hours < 0.0) {
    fail(ErrorKind::Domain, "duration must be >= 0 hours");
  }
  EmissionsBreakdown out;
  if (duration_hours > 0.0) {
    const IntervalEnergy iv{
        start, start + std::max<Timestamp>(
                           1, std::llround(duration_hours * 3600.0)),
        mean_power_kw * duration_hours};
    out.scope2_kg = scope2_emissions(std::span(&iv, 1), profile);
  }
  out.total_kg = out.scope2_kg;
  return out;
}

EmissionsBreakdown lifetime_emissions(
    double mean_power_kw, double duration_hours, Timestamp start,
    const CarbonIntensityProfile& profile,
    const std::optional<EmbodiedEmissions>& embodied) {
  if (!embodied) {
    fail(ErrorKind::Validation,
         "embodied emissions are not set; supply them or request "
         "operational emissions only");
  }
  auto out = operational_emissions(mean_power_kw, duration_hours, start,
                                   profile);
  out.scope3_kg = amortized_scope3(*embodied, duration_hours);
  out.total_kg = out.scope2_kg + out.scope3_kg;
  return out;
}

OutputEfficiency output_efficiency(double output_units, double energy_kwh,
                                   double nodeh,
                                   const EmissionsBreakdown& breakdown) {
  if (!(energy_kwh > 0.0) || !(nodeh > 0.0) || !(breakdown.total_kg > 0.0)) {
    fail(ErrorKind::Domain,
         "efficiency denominators (kWh, nodeh, kgCO2) must be > 0");
  }
  return {output_units / nodeh, output_units / energy_kwh,
          output_units / breakdown.total_kg};
}

}  // namespace hpcenergy::emissions
