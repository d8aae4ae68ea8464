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

#include "hpcenergy/power_model.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "hpcenergy/error.hpp"

namespace hpcenergy::power {

void ComponentSpec::validate() const {
  if (name.empty()) {
    fail(ErrorKind::Validation, "component name must not be empty");
  }
  if (count < 1) {
    fail(ErrorKind::Validation,
         "component '" + name + "': count must be >= 1");
  }
  if (!std::isfinite(idle_kw_per_unit) || !std::isfinite(loaded_kw_per_unit) ||
      idle_kw_per_unit < 0.0 || loaded_kw_per_unit < 0.0) {
    fail(ErrorKind::Validation,
         "component '" + name + "': per-unit power must be finite and >= 0");
  }
  if (loaded_kw_per_unit < idle_kw_per_unit) {
    fail(ErrorKind::Validation,
         "component '" + name + "': loaded power below idle power");
  }
}

SystemModel::SystemModel(std::string name, std::vector<ComponentSpec> components,
                         std::string compute_component)
    : name_(std::move(name)),
      components_(std::move(components)),
      compute_component_(std::move(compute_component)) {
  std::set<std::string_view> seen;
  for (const auto& c : components_) {
    c.validate();
    if (!seen.insert(c.name).second) {
      fail(ErrorKind::Validation, "duplicate component '" + c.name + "'");
    }
  }
  if (!(components_.empty() && compute_component_.empty()) &&
      find(compute_component_) == nullptr) {
    fail(ErrorKind::Validation, "compute_component '" + compute_component_ +
                                    "' is not a component of the model");
  }
}

const ComponentSpec* SystemModel::find(std::string_view component) const {
  for (const auto& c : components_) {
    if (c.name == component) return &c;
  }
  return nullptr;
}

double PowerBreakdown::at(std::string_view component) const {
  for (const auto& [name, kw] : per_component) {
    if (name == component) return kw;
  }
  fail(ErrorKind::NotFound,
       "no component '" + std::string(component) + "' in breakdown");
}

double component_power(const ComponentSpec& spec, double utilization) {
  if (!(utilization >= 0.0 && utilization <= 1.0)) {
    std::ostringstream msg;
    msg << "utilization " << utilization << " outside [0, 1]";
    fail(ErrorKind::Domain, msg.str());
  }
  const double units = static_cast<double>(spec.count);
  if (spec.load_response == LoadResponse::Constant) {
    return units * spec.idle_kw_per_unit;
  }
  return units * (spec.idle_kw_per_unit +
                  utilization *
                      (spec.loaded_kw_per_unit - spec.idle_kw_per_unit));
}

PowerBreakdown system_power(const SystemModel& model, double utilization) {
  PowerBreakdown out;
  out.per_component.reserve(model.components().size());
  for (const auto& c : model.components()) {
    const double kw = component_power(c, utilization);
    out.per_component.emplace_back(c.name, kw);
    out.total_kw += kw;
  }
  return out;
}

SystemModel apply_power_factor(const SystemModel& model,
                               std::string_view component, double factor,
                               FactorMode mode) {
  const bool ok = mode == FactorMode::WholeDraw ? factor > 0.0 : factor >= 0.0;
  if (!ok || !std::isfinite(factor)) {
    std::ostringstream msg;
    msg << "power factor " << factor << " must be "
        << (mode == FactorMode::WholeDraw ? "> 0" : ">= 0");
    fail(ErrorKind::Domain, msg.str());
  }
  if (model.find(component) == nullptr) {
    fail(ErrorKind::NotFound,
         "unknown component '" + std::string(component) + "'");
  }
  auto components = model.components();
  for (auto& c : components) {
    if (c.name != component) continue;
    if (mode == FactorMode::WholeDraw) {
      c.idle_kw_per_unit *= factor;
      c.loaded_kw_per_unit *= factor;
    } else {
      c.loaded_kw_per_unit =
          c.idle_kw_per_unit + factor * (c.loaded_kw_per_unit - c.idle_kw_per_unit);
    }
  }
  return SystemModel(model.name(), std::move(components),
                     model.compute_component());
}

SystemModel reference_model_archer2() {
  // Per-unit figures from the vendor/measured component table. Switches draw
  // a steady 200-250 W regardless of load. Cabinet overhead idle is taken
  // inside its published 4-9 kW range so that the idle total is 1,800 kW.
  return SystemModel(
      "ARCHER2",
      {
          {kArcher2ComputeComponent, 5860, 0.23, 0.51, LoadResponse::Linear},
          {"interconnect_switches", 768, 0.25, 0.25, LoadResponse::Constant},
          {"cabinet_overheads", 23, 5.4, 9.0, LoadResponse::Linear},
          {"coolant_distribution_units", 6, 16.0, 16.0, LoadResponse::Constant},
          {"file_systems", 5, 8.0, 8.0, LoadResponse::Constant},
      },
      kArcher2ComputeComponent);
}

}  // namespace hpcenergy::power
