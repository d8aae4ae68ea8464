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

#ifndef HPCENERGY_IO_HPP_
#define HPCENERGY_IO_HPP_

#include <filesystem>
#include <string>

#include "hpcenergy/emissions.hpp"
#include "hpcenergy/power_model.hpp"
#include "hpcenergy/simulator.hpp"
#include "hpcenergy/telemetry.hpp"

// JSON and CSV documents for the modeling types. JSON parsing rejects unknown
// fields; syntax errors and missing fields throw Parse, invariant violations
// throw Validation.
namespace hpcenergy::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

power::SystemModel model_from_json(const std::string& text);
std::string model_to_json(const power::SystemModel& model);
power::SystemModel load_model(const std::filesystem::path& path);

std::string breakdown_to_json(const power::PowerBreakdown& b);
power::PowerBreakdown breakdown_from_json(const std::string& text);

/// `{"total_kgco2e": ..., "service_lifetime_hours": ...}`
emissions::EmbodiedEmissions embodied_from_json(const std::string& text);

/// CSV `timestamp,intensity_g_per_kwh`.
emissions::CarbonIntensityProfile load_intensity_csv(
    const std::filesystem::path& path);

/// Relative file references inside the document resolve against base_dir.
sim::ScenarioConfig scenario_from_json(const std::string& text,
                                       const std::filesystem::path& base_dir);
sim::ScenarioConfig load_scenario(const std::filesystem::path& path);

std::string result_to_json(const sim::ScenarioResult& r);
sim::ScenarioResult result_from_json(const std::string& text);

/// Recipe `{"seed":..., "start":"...", "segments":[{"duration_hours":...,
/// "n_samples":..., "mean_kw":..., "noise_sd_kw":...}]}`.
struct SynthRecipe {
  std::uint64_t seed = 0;
  Timestamp start = 0;
  std::vector<telemetry::Segment> segments;
};
SynthRecipe recipe_from_json(const std::string& text);

}  // namespace hpcenergy::io

#endif  // HPCENERGY_IO_HPP_
