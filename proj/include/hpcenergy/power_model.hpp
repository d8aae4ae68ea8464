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

#ifndef HPCENERGY_POWER_MODEL_HPP_
#define HPCENERGY_POWER_MODEL_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hpcenergy::power {

enum class LoadResponse { Linear, Constant };

/// How a multiplicative power factor is applied to a component.
enum class FactorMode {
  WholeDraw,    // scale idle and loaded per-unit power
  DynamicOnly,  // scale only (loaded - idle); the idle floor is untouched
};

/// One class of identical power-drawing units (nodes, switches, CDUs...).
struct ComponentSpec {
  std::string name;
  long count = 1;
  double idle_kw_per_unit = 0.0;
  double loaded_kw_per_unit = 0.0;
  LoadResponse load_response = LoadResponse::Linear;

  /// Throws Validation if count < 1, powers are negative/non-finite or
  /// loaded < idle.
  void validate() const;

  bool operator==(const ComponentSpec&) const = default;
};

class SystemModel {
 public:
  SystemModel() = default;
  /// Validates: unique component names, compute_component present (unless
  /// the component list is empty, in which case it may be empty too).
  SystemModel(std::string name, std::vector<ComponentSpec> components,
              std::string compute_component);

  const std::string& name() const { return name_; }
  const std::vector<ComponentSpec>& components() const { return components_; }
  const std::string& compute_component() const { return compute_component_; }

  /// nullptr when absent.
  const ComponentSpec* find(std::string_view component) const;

  bool operator==(const SystemModel&) const = default;

 private:
  std::string name_;
  std::vector<ComponentSpec> components_;
  std::string compute_component_;
};

/// Per-component draw in model order plus the total.
struct PowerBreakdown {
  std::vector<std::pair<std::string, double>> per_component;
  double total_kw = 0.0;

  /// Throws NotFound for an unknown name.
  double at(std::string_view component) const;

  bool operator==(const PowerBreakdown&) const = default;
};

/// Linear: count * (idle + u * (loaded - idle)); Constant: count * idle.
/// Throws Domain when u is outside [0, 1].
double component_power(const ComponentSpec& spec, double utilization);

PowerBreakdown system_power(const SystemModel& model, double utilization);

/// Returns a copy of `model` with one component's per-unit power scaled.
/// Throws NotFound for an unknown component and Domain for factor <= 0
/// (DynamicOnly additionally accepts factor == 0, which removes all dynamic
/// power).
SystemModel apply_power_factor(const SystemModel& model,
                               std::string_view component, double factor,
                               FactorMode mode);

/// ARCHER2 per-component model: compute nodes, Slingshot switches, cabinet
/// overheads, coolant distribution units and file systems.
SystemModel reference_model_archer2();

inline constexpr const char* kArcher2ComputeComponent = "compute_nodes";

}  // namespace hpcenergy::power

#endif  // HPCENERGY_POWER_MODEL_HPP_
