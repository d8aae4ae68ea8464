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

#include "hpcenergy/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "hpcenergy/error.hpp"

namespace hpcenergy::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string(what) + ": " + e.what());
  }
}

void require_object(const json& j, std::string_view what) {
  if (!j.is_object()) {
    fail(ErrorKind::Parse, std::string(what) + " must be a JSON object");
  }
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> known,
                    std::string_view what) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || key == k;
    if (!ok) {
      fail(ErrorKind::Parse,
           std::string(what) + ": unknown field '" + key + "'");
    }
  }
}

const json& field(const json& j, const char* key, std::string_view what) {
  auto it = j.find(key);
  if (it == j.end()) {
    fail(ErrorKind::Parse,
         std::string(what) + ": missing field '" + key + "'");
  }
  return *it;
}

double number(const json& j, const char* key, std::string_view what) {
  const auto& v = field(j, key, what);
  if (!v.is_number()) {
    fail(ErrorKind::Parse, std::string(what) + ": '" + key + "' must be a number");
  }
  return v.get<double>();
}

std::string string(const json& j, const char* key, std::string_view what) {
  const auto& v = field(j, key, what);
  if (!v.is_string()) {
    fail(ErrorKind::Parse, std::string(what) + ": '" + key + "' must be a string");
  }
  return v.get<std::string>();
}

long integer(const json& j, const char* key, std::string_view what) {
  const auto& v = field(j, key, what);
  if (!v.is_number_integer()) {
    fail(ErrorKind::Parse,
         std::string(what) + ": '" + key + "' must be an integer");
  }
  return v.get<long>();
}

power::SystemModel model_from(const json& j) {
  constexpr std::string_view what = "system model";
  require_object(j, what);
  reject_unknown(j, {"name", "compute_component", "components"}, what);
  const auto& list = field(j, "components", what);
  if (!list.is_array()) fail(ErrorKind::Parse, "system model: 'components' must be an array");
  std::vector<power::ComponentSpec> components;
  for (const auto& c : list) {
    constexpr std::string_view cwhat = "component";
    require_object(c, cwhat);
    reject_unknown(c, {"name", "count", "idle_kw_per_unit", "loaded_kw_per_unit",
                       "load_response"},
                   cwhat);
    power::ComponentSpec spec;
    spec.name = string(c, "name", cwhat);
    spec.count = integer(c, "count", cwhat);
    spec.idle_kw_per_unit = number(c, "idle_kw_per_unit", cwhat);
    spec.loaded_kw_per_unit = number(c, "loaded_kw_per_unit", cwhat);
    const auto response = string(c, "load_response", cwhat);
    if (response == "linear") {
      spec.load_response = power::LoadResponse::Linear;
    } else if (response == "constant") {
      spec.load_response = power::LoadResponse::Constant;
    } else {
      fail(ErrorKind::Parse, "component '" + spec.name +
                                 "': load_response must be \"linear\" or "
                                 "\"constant\"");
    }
    components.push_back(std::move(spec));
  }
  return power::SystemModel(string(j, "name", what), std::move(components),
                            string(j, "compute_component", what));
}

ordered_json model_json(const power::SystemModel& m) {
  ordered_json j;
  j["name"] = m.name();
  j["compute_component"] = m.compute_component();
  j["components"] = ordered_json::array();
  for (const auto& c : m.components()) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["count"] = c.count;
    cj["idle_kw_per_unit"] = c.idle_kw_per_unit;
    cj["loaded_kw_per_unit"] = c.loaded_kw_per_unit;
    cj["load_response"] =
        c.load_response == power::LoadResponse::Linear ? "linear" : "constant";
    j["components"].push_back(std::move(cj));
  }
  return j;
}

ordered_json breakdown_json(const power::PowerBreakdown& b) {
  ordered_json j;
  j["per_component"] = ordered_json::array();
  for (const auto& [name, kw] : b.per_component) {
    j["per_component"].push_back({{"name", name}, {"kw", kw}});
  }
  j["total_kw"] = b.total_kw;
  return j;
}

power::PowerBreakdown breakdown_from(const json& j) {
  constexpr std::string_view what = "power breakdown";
  require_object(j, what);
  reject_unknown(j, {"per_component", "total_kw"}, what);
  power::PowerBreakdown b;
  const auto& list = field(j, "per_component", what);
  if (!list.is_array()) fail(ErrorKind::Parse, "power breakdown: 'per_component' must be an array");
  for (const auto& e : list) {
    require_object(e, what);
    reject_unknown(e, {"name", "kw"}, what);
    b.per_component.emplace_back(string(e, "name", what), number(e, "kw", what));
  }
  b.total_kw = number(j, "total_kw", what);
  return b;
}

emissions::EmbodiedEmissions embodied_from(const json& j) {
  constexpr std::string_view what = "embodied emissions";
  require_object(j, what);
  reject_unknown(j, {"total_kgco2e", "service_lifetime_hours"}, what);
  emissions::EmbodiedEmissions e{number(j, "total_kgco2e", what),
                                 number(j, "service_lifetime_hours", what)};
  e.validate();
  return e;
}

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& ref) {
  std::filesystem::path p(ref);
  return p.is_absolute() ? p : base / p;
}

policy::FrequencySetting setting_from(const std::string& s) {
  using policy::FrequencySetting;
  for (auto f : {FrequencySetting::F1500, FrequencySetting::F2000,
                 FrequencySetting::F2250Turbo}) {
    if (policy::to_string(f) == s) return f;
  }
  fail(ErrorKind::Parse, "unknown frequency setting '" + s + "'");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) fail(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

power::SystemModel model_from_json(const std::string& text) {
  return model_from(parse_json(text, "system model"));
}

std::string model_to_json(const power::SystemModel& model) {
  return model_json(model).dump(2) + "\n";
}

power::SystemModel load_model(const std::filesystem::path& path) {
  return model_from_json(read_file(path));
}

std::string breakdown_to_json(const power::PowerBreakdown& b) {
  return breakdown_json(b).dump(2) + "\n";
}

power::PowerBreakdown breakdown_from_json(const std::string& text) {
  return breakdown_from(parse_json(text, "power breakdown"));
}

emissions::EmbodiedEmissions embodied_from_json(const std::string& text) {
  return embodied_from(parse_json(text, "embodied emissions"));
}

emissions::CarbonIntensityProfile load_intensity_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::vector<std::pair<Timestamp, double>> points;
  csv::read(in, {"timestamp", "intensity_g_per_kwh"},
            [&](const std::vector<std::string>& f, std::size_t lineno) {
              Timestamp t = 0;
              try {
                t = parse_timestamp(f[0]);
              } catch (const Error& e) {
                fail(ErrorKind::Parse,
                     "line " + std::to_string(lineno) + ": " + e.what());
              }
              points.emplace_back(
                  t, csv::to_double(f[1], lineno, "intensity_g_per_kwh"));
            });
  return emissions::CarbonIntensityProfile::series(std::move(points));
}

sim::ScenarioConfig scenario_from_json(const std::string& text,
                                       const std::filesystem::path& base_dir) {
  constexpr std::string_view what = "scenario";
  const auto j = parse_json(text, what);
  require_object(j, what);
  reject_unknown(j,
                 {"model", "benchmarks", "mix", "utilization", "rule",
                  "bios_factor", "duration_hours", "start", "carbon",
                  "embodied"},
                 what);
  sim::ScenarioConfig cfg;

  const auto& model = field(j, "model", what);
  if (model.is_string()) {
    cfg.model = load_model(resolve(base_dir, model.get<std::string>()));
  } else if (model.is_object()) {
    cfg.model = model_from(model);
  } else if (model.is_null()) {
    cfg.model = power::reference_model_archer2();
  } else {
    fail(ErrorKind::Parse, "scenario: 'model' must be a path, object or null");
  }

  if (j.contains("benchmarks")) {
    cfg.benchmarks = policy::load_benchmark_table(
        resolve(base_dir, string(j, "benchmarks", what)).string());
  }

  if (j.contains("mix")) {
    const auto& mix = j["mix"];
    if (mix.is_string() && mix.get<std::string>() == "equal") {
      cfg.mix.entries = policy::equal_weights(cfg.benchmarks);
    } else if (mix.is_object()) {
      for (const auto& [app, w] : mix.items()) {
        if (!w.is_number()) {
          fail(ErrorKind::Parse, "scenario: mix weight for '" + app + "' must be a number");
        }
        cfg.mix.entries[app] = w.get<double>();
      }
    } else {
      fail(ErrorKind::Parse, "scenario: 'mix' must be \"equal\" or an object");
    }
  }

  cfg.utilization = number(j, "utilization", what);
  if (!j.contains("rule")) {
    cfg.rule = policy::PolicyRule{};
  } else if (!j["rule"].is_null()) {
    const auto& rule = j["rule"];
    require_object(rule, "rule");
    reject_unknown(rule, {"perf_loss_threshold"}, "rule");
    cfg.rule = policy::PolicyRule{number(rule, "perf_loss_threshold", "rule")};
  }
  if (j.contains("bios_factor")) cfg.bios_factor = number(j, "bios_factor", what);
  cfg.duration_hours = number(j, "duration_hours", what);

  bool have_start = false;
  if (j.contains("start")) {
    cfg.start = parse_timestamp(string(j, "start", what));
    have_start = true;
  }
  if (j.contains("carbon")) {
    const auto& c = j["carbon"];
    require_object(c, "carbon");
    reject_unknown(c, {"constant_g_per_kwh", "csv"}, "carbon");
    if (c.contains("constant_g_per_kwh") == c.contains("csv")) {
      fail(ErrorKind::Parse,
           "carbon: give exactly one of 'constant_g_per_kwh' or 'csv'");
    }
    if (c.contains("csv")) {
      cfg.carbon = load_intensity_csv(resolve(base_dir, string(c, "csv", "carbon")));
      if (!have_start) cfg.start = cfg.carbon.points().front().first;
    } else {
      cfg.carbon = emissions::CarbonIntensityProfile::constant(
          number(c, "constant_g_per_kwh", "carbon"));
    }
  }
  if (j.contains("embodied") && !j["embodied"].is_null()) {
    cfg.embodied = embodied_from(j["embodied"]);
  }
  cfg.validate();
  return cfg;
}

sim::ScenarioConfig load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_file(path), path.parent_path());
}

std::string result_to_json(const sim::ScenarioResult& r) {
  ordered_json j;
  j["duration_hours"] = r.duration_hours;
  j["mean_power_kw"] = r.mean_power_kw;
  j["breakdown"] = breakdown_json(r.breakdown);
  j["energy_kwh"] = r.energy_kwh;
  j["emissions"] = {{"scope2_kg", r.emissions.scope2_kg},
                    {"scope3_kg", r.emissions.scope3_kg},
                    {"total_kg", r.emissions.total_kg}};
  j["fleet_power_ratio"] = r.fleet_power_ratio;
  j["throughput_index"] = r.throughput_index;
  j["decisions"] = ordered_json::array();
  for (const auto& d : r.decisions) {
    ordered_json dj;
    dj["app_name"] = d.app_name;
    dj["default_setting"] = policy::to_string(d.default_setting);
    dj["reverted"] = d.reverted;
    dj["perf_loss"] = d.perf_loss;
    dj["energy_saving"] = d.energy_saving;
    j["decisions"].push_back(std::move(dj));
  }
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

sim::ScenarioResult result_from_json(const std::string& text) {
  constexpr std::string_view what = "scenario result";
  const auto j = parse_json(text, what);
  require_object(j, what);
  reject_unknown(j,
                 {"duration_hours", "mean_power_kw", "breakdown", "energy_kwh",
                  "emissions", "fleet_power_ratio", "throughput_index",
                  "decisions", "warnings"},
                 what);
  sim::ScenarioResult r;
  r.duration_hours = number(j, "duration_hours", what);
  r.mean_power_kw = number(j, "mean_power_kw", what);
  r.breakdown = breakdown_from(field(j, "breakdown", what));
  r.energy_kwh = number(j, "energy_kwh", what);
  const auto& e = field(j, "emissions", what);
  require_object(e, "emissions");
  reject_unknown(e, {"scope2_kg", "scope3_kg", "total_kg"}, "emissions");
  r.emissions = {number(e, "scope2_kg", "emissions"),
                 number(e, "scope3_kg", "emissions"),
                 number(e, "total_kg", "emissions")};
  r.fleet_power_ratio = number(j, "fleet_power_ratio", what);
  r.throughput_index = number(j, "throughput_index", what);
  for (const auto& d : field(j, "decisions", what)) {
    constexpr std::string_view dwhat = "decision";
    require_object(d, dwhat);
    reject_unknown(d, {"app_name", "default_setting", "reverted", "perf_loss",
                       "energy_saving"},
                   dwhat);
    policy::PolicyDecision pd;
    pd.app_name = string(d, "app_name", dwhat);
    pd.default_setting = setting_from(string(d, "default_setting", dwhat));
    const auto& rev = field(d, "reverted", dwhat);
    if (!rev.is_boolean()) fail(ErrorKind::Parse, "decision: 'reverted' must be a boolean");
    pd.reverted = rev.get<bool>();
    pd.perf_loss = number(d, "perf_loss", dwhat);
    pd.energy_saving = number(d, "energy_saving", dwhat);
    r.decisions.push_back(std::move(pd));
  }
  for (const auto& w : field(j, "warnings", what)) {
    if (!w.is_string()) fail(ErrorKind::Parse, "warnings must be strings");
    r.warnings.push_back(w.get<std::string>());
  }
  return r;
}

SynthRecipe recipe_from_json(const std::string& text) {
  constexpr std::string_view what = "synth recipe";
  const auto j = parse_json(text, what);
  require_object(j, what);
  reject_unknown(j, {"seed", "start", "segments"}, what);
  SynthRecipe r;
  r.seed = static_cast<std::uint64_t>(integer(j, "seed", what));
  r.start = parse_timestamp(string(j, "start", what));
  const auto& list = field(j, "segments", what);
  if (!list.is_array()) fail(ErrorKind::Parse, "synth recipe: 'segments' must be an array");
  for (const auto& s : list) {
    constexpr std::string_view swhat = "segment";
    require_object(s, swhat);
    reject_unknown(s, {"duration_hours", "n_samples", "mean_kw", "noise_sd_kw"},
                   swhat);
    const long n = integer(s, "n_samples", swhat);
    if (n < 1) fail(ErrorKind::Domain, "segment: n_samples must be >= 1");
    r.segments.push_back({number(s, "duration_hours", swhat) * 3600.0,
                          static_cast<std::size_t>(n), number(s, "mean_kw", swhat),
                          number(s, "noise_sd_kw", swhat)});
  }
  return r;
}

}  // namespace hpcenergy::io
