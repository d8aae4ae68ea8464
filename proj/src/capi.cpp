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

#include "hpcenergy/hpcenergy.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "hpcenergy/emissions.hpp"
#include "hpcenergy/error.hpp"
#include "hpcenergy/freq_policy.hpp"
#include "hpcenergy/io.hpp"
#include "hpcenergy/power_model.hpp"
#include "hpcenergy/simulator.hpp"
#include "hpcenergy/telemetry.hpp"
#include "hpcenergy/timestamp.hpp"

using namespace hpcenergy;

struct hpce_model {
  power::SystemModel value;
};
struct hpce_breakdown {
  power::PowerBreakdown value;
};
struct hpce_profile {
  emissions::CarbonIntensityProfile value;
};
struct hpce_benchmarks {
  std::vector<policy::AppBenchmark> value;
};
struct hpce_fleet {
  policy::FleetRatios value;
};
struct hpce_series {
  telemetry::PowerSeries value;
};
struct hpce_scenario {
  sim::ScenarioConfig value;
};
struct hpce_result {
  sim::ScenarioResult value;
};

namespace {

thread_local std::string g_last_error;

hpce_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return HPCE_E_DOMAIN;
    case ErrorKind::Validation: return HPCE_E_VALIDATION;
    case ErrorKind::Coverage: return HPCE_E_COVERAGE;
    case ErrorKind::NotFound: return HPCE_E_NOT_FOUND;
    case ErrorKind::Parse: return HPCE_E_PARSE;
    case ErrorKind::Io: return HPCE_E_IO;
  }
  return HPCE_E_INTERNAL;
}

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
hpce_status guard(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return HPCE_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const ArgumentError& e) {
    g_last_error = e.what();
    return HPCE_E_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HPCE_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HPCE_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HPCE_E_INTERNAL;
  }
}

template <typename T>
const T& need(const T* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " is NULL");
  return *p;
}

const char* need(const char* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " is NULL");
  return p;
}

template <typename T>
T& need_out(T* p, const char* what) {
  if (p == nullptr) throw ArgumentError(std::string(what) + " is NULL");
  return *p;
}

void check_index(std::size_t index, std::size_t size) {
  if (index >= size) {
    throw ArgumentError("index " + std::to_string(index) +
                        " out of range (size " + std::to_string(size) + ")");
  }
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

power::ComponentSpec to_spec(const hpce_component& c) {
  if (c.name == nullptr) throw ArgumentError("component name is NULL");
  return {c.name, c.count, c.idle_kw_per_unit, c.loaded_kw_per_unit,
          c.load_response == HPCE_LOAD_CONSTANT ? power::LoadResponse::Constant
                                                : power::LoadResponse::Linear};
}

policy::AppBenchmark to_benchmark(const hpce_benchmark& b) {
  if (b.app_name == nullptr) throw ArgumentError("app_name is NULL");
  return {b.app_name, b.nodes,
          b.intervention == HPCE_BIOS_DETERMINISM
              ? policy::Intervention::BiosDeterminism
              : policy::Intervention::FreqCap2000,
          b.perf_ratio, b.energy_ratio};
}

hpce_decision to_c(const policy::PolicyDecision& d) {
  hpce_decision out{};
  out.app_name = d.app_name.c_str();
  out.default_setting = static_cast<hpce_frequency>(d.default_setting);
  out.reverted = d.reverted ? 1 : 0;
  out.perf_loss = d.perf_loss;
  out.energy_saving = d.energy_saving;
  return out;
}

hpce_window to_c(const telemetry::WindowStats& w) {
  return {w.start, w.end, w.count, w.mean_kw, w.stddev_kw};
}

hpce_emissions to_c(const emissions::EmissionsBreakdown& e) {
  return {e.scope2_kg, e.scope3_kg, e.total_kg};
}

}  // namespace

extern "C" {

const char* hpce_last_error(void) { return g_last_error.c_str(); }

const char* hpce_status_name(hpce_status status) {
  switch (status) {
    case HPCE_OK: return "ok";
    case HPCE_E_DOMAIN: return "domain error";
    case HPCE_E_VALIDATION: return "validation error";
    case HPCE_E_COVERAGE: return "coverage error";
    case HPCE_E_NOT_FOUND: return "not found";
    case HPCE_E_PARSE: return "parse error";
    case HPCE_E_IO: return "I/O error";
    case HPCE_E_ARGUMENT: return "invalid argument";
    case HPCE_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hpce_version(void) { return "1.0.0"; }

void hpce_string_free(char* s) { std::free(s); }

hpce_status hpce_parse_time(const char* iso8601, hpce_time* out) {
  return guard([&] { need_out(out, "out") = parse_timestamp(need(iso8601, "time")); });
}

hpce_status hpce_format_time(hpce_time t, char* buf, size_t size) {
  return guard([&] {
    const auto s = format_timestamp(t);
    if (buf == nullptr || size < s.size() + 1) {
      throw ArgumentError("time buffer too small");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

// ---- power model ---------------------------------------------------------

hpce_status hpce_model_reference_archer2(hpce_model** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_model{power::reference_model_archer2()};
  });
}

hpce_status hpce_model_create(const char* name, const hpce_component* components,
                              size_t n, const char* compute_component,
                              hpce_model** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    if (n > 0 && components == nullptr) throw ArgumentError("components is NULL");
    std::vector<power::ComponentSpec> specs;
    for (size_t i = 0; i < n; ++i) specs.push_back(to_spec(components[i]));
    dst = new hpce_model{power::SystemModel(
        name ? name : "", std::move(specs),
        compute_component ? compute_component : "")};
  });
}

hpce_status hpce_model_load(const char* path, hpce_model** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_model{io::load_model(need(path, "path"))};
  });
}

hpce_status hpce_model_from_json(const char* json, hpce_model** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_model{io::model_from_json(need(json, "json"))};
  });
}

hpce_status hpce_model_to_json(const hpce_model* model, char** out) {
  return guard([&] {
    need_out(out, "out") = dup_string(io::model_to_json(need(model, "model").value));
  });
}

hpce_status hpce_model_save(const hpce_model* model, const char* path) {
  return guard([&] {
    io::write_file(need(path, "path"), io::model_to_json(need(model, "model").value));
  });
}

void hpce_model_free(hpce_model* model) { delete model; }

hpce_status hpce_model_name(const hpce_model* model, const char** out) {
  return guard([&] { need_out(out, "out") = need(model, "model").value.name().c_str(); });
}

hpce_status hpce_model_compute_component(const hpce_model* model,
                                         const char** out) {
  return guard([&] {
    need_out(out, "out") = need(model, "model").value.compute_component().c_str();
  });
}

hpce_status hpce_model_component_count(const hpce_model* model, size_t* out) {
  return guard([&] {
    need_out(out, "out") = need(model, "model").value.components().size();
  });
}

hpce_status hpce_model_component(const hpce_model* model, size_t index,
                                 hpce_component* out) {
  return guard([&] {
    const auto& comps = need(model, "model").value.components();
    check_index(index, comps.size());
    const auto& c = comps[index];
    need_out(out, "out") = {c.name.c_str(), c.count, c.idle_kw_per_unit,
                            c.loaded_kw_per_unit,
                            c.load_response == power::LoadResponse::Constant
                                ? HPCE_LOAD_CONSTANT
                                : HPCE_LOAD_LINEAR};
  });
}

hpce_status hpce_model_apply_factor(const hpce_model* model, const char* component,
                                    double factor, hpce_factor_mode mode,
                                    hpce_model** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    dst = new hpce_model{power::apply_power_factor(
        need(model, "model").value, need(component, "component"), factor,
        mode == HPCE_FACTOR_DYNAMIC_ONLY ? power::FactorMode::DynamicOnly
                                         : power::FactorMode::WholeDraw)};
  });
}

hpce_status hpce_component_power(const hpce_component* component,
                                 double utilization, double* out_kw) {
  return guard([&] {
    const auto spec = to_spec(need(component, "component"));
    spec.validate();
    need_out(out_kw, "out_kw") = power::component_power(spec, utilization);
  });
}

hpce_status hpce_system_power(const hpce_model* model, double utilization,
                              hpce_breakdown** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    dst = new hpce_breakdown{power::system_power(need(model, "model").value, utilization)};
  });
}

hpce_status hpce_breakdown_total(const hpce_breakdown* b, double* out_kw) {
  return guard([&] { need_out(out_kw, "out_kw") = need(b, "breakdown").value.total_kw; });
}

hpce_status hpce_breakdown_count(const hpce_breakdown* b, size_t* out) {
  return guard([&] {
    need_out(out, "out") = need(b, "breakdown").value.per_component.size();
  });
}

hpce_status hpce_breakdown_entry(const hpce_breakdown* b, size_t index,
                                 const char** name, double* kw) {
  return guard([&] {
    const auto& entries = need(b, "breakdown").value.per_component;
    check_index(index, entries.size());
    need_out(name, "name") = entries[index].first.c_str();
    need_out(kw, "kw") = entries[index].second;
  });
}

hpce_status hpce_breakdown_to_json(const hpce_breakdown* b, char** out) {
  return guard([&] {
    need_out(out, "out") = dup_string(io::breakdown_to_json(need(b, "breakdown").value));
  });
}

hpce_status hpce_breakdown_from_json(const char* json, hpce_breakdown** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_breakdown{io::breakdown_from_json(need(json, "json"))};
  });
}

void hpce_breakdown_free(hpce_breakdown* b) { delete b; }

// ---- emissions -----------------------------------------------------------

hpce_status hpce_classify_scenario(double g_per_kwh, hpce_scenario_kind* out) {
  return guard([&] {
    need_out(out, "out") =
        static_cast<hpce_scenario_kind>(emissions::classify_scenario(g_per_kwh));
  });
}

hpce_status hpce_recommended_objective(hpce_scenario_kind scenario,
                                       hpce_objective* out) {
  return guard([&] {
    if (scenario < HPCE_SCOPE3_DOMINATED || scenario > HPCE_SCOPE2_DOMINATED) {
      throw ArgumentError("unknown scenario kind");
    }
    need_out(out, "out") = static_cast<hpce_objective>(emissions::recommended_objective(
        static_cast<emissions::Scenario>(scenario)));
  });
}

const char* hpce_scenario_kind_name(hpce_scenario_kind scenario) {
  return emissions::to_string(static_cast<emissions::Scenario>(scenario)).data();
}

const char* hpce_objective_name(hpce_objective objective) {
  return emissions::to_string(static_cast<emissions::Objective>(objective)).data();
}

hpce_status hpce_profile_constant(double g_per_kwh, hpce_profile** out) {
  return guard([&] {
    need_out(out, "out") =
        new hpce_profile{emissions::CarbonIntensityProfile::constant(g_per_kwh)};
  });
}

hpce_status hpce_profile_series(const hpce_time* times, const double* g_per_kwh,
                                size_t n, hpce_profile** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    if (n > 0 && (times == nullptr || g_per_kwh == nullptr)) {
      throw ArgumentError("series arrays are NULL");
    }
    std::vector<std::pair<Timestamp, double>> points;
    for (size_t i = 0; i < n; ++i) points.emplace_back(times[i], g_per_kwh[i]);
    dst = new hpce_profile{emissions::CarbonIntensityProfile::series(std::move(points))};
  });
}

hpce_status hpce_profile_load_csv(const char* path, hpce_profile** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_profile{io::load_intensity_csv(need(path, "path"))};
  });
}

hpce_status hpce_profile_first_time(const hpce_profile* p, hpce_time* out) {
  return guard([&] {
    const auto& profile = need(p, "profile").value;
    if (profile.is_constant()) fail(ErrorKind::NotFound, "profile is constant");
    need_out(out, "out") = profile.points().front().first;
  });
}

void hpce_profile_free(hpce_profile* p) { delete p; }

hpce_status hpce_embodied_load(const char* path, hpce_embodied* out) {
  return guard([&] {
    const auto e = io::embodied_from_json(io::read_file(need(path, "path")));
    need_out(out, "out") = {e.total_kgco2e, e.service_lifetime_hours};
  });
}

hpce_status hpce_scope2_emissions(const hpce_interval_energy* intervals, size_t n,
                                  const hpce_profile* p, double* out_kg) {
  return guard([&] {
    if (n > 0 && intervals == nullptr) throw ArgumentError("intervals is NULL");
    std::vector<emissions::IntervalEnergy> ivs;
    for (size_t i = 0; i < n; ++i) {
      ivs.push_back({intervals[i].start, intervals[i].end, intervals[i].kwh});
    }
    need_out(out_kg, "out_kg") = emissions::scope2_emissions(ivs, need(p, "profile").value);
  });
}

hpce_status hpce_amortized_scope3(const hpce_embodied* embodied,
                                  double duration_hours, double* out_kg) {
  return guard([&] {
    const auto& e = need(embodied, "embodied");
    need_out(out_kg, "out_kg") = emissions::amortized_scope3(
        {e.total_kgco2e, e.service_lifetime_hours}, duration_hours);
  });
}

hpce_status hpce_lifetime_emissions(double mean_power_kw, double duration_hours,
                                    hpce_time start, const hpce_profile* p,
                                    const hpce_embodied* embodied,
                                    hpce_emissions* out, int* scope3_unset) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    const auto& profile = need(p, "profile").value;
    if (embodied != nullptr) {
      dst = to_c(emissions::lifetime_emissions(
          mean_power_kw, duration_hours, start, profile,
          emissions::EmbodiedEmissions{embodied->total_kgco2e,
                                       embodied->service_lifetime_hours}));
    } else {
      dst = to_c(emissions::operational_emissions(mean_power_kw, duration_hours,
                                                  start, profile));
    }
    if (scope3_unset != nullptr) *scope3_unset = embodied == nullptr ? 1 : 0;
  });
}

hpce_status hpce_output_efficiency(double output_units, double energy_kwh,
                                   double nodeh, const hpce_emissions* breakdown,
                                   hpce_efficiency* out) {
  return guard([&] {
    const auto& b = need(breakdown, "breakdown");
    const auto e = emissions::output_efficiency(
        output_units, energy_kwh, nodeh, {b.scope2_kg, b.scope3_kg, b.total_kg});
    need_out(out, "out") = {e.per_nodeh, e.per_kwh, e.per_kgco2};
  });
}

// ---- frequency policy ----------------------------------------------------

const char* hpce_frequency_name(hpce_frequency f) {
  return policy::to_string(static_cast<policy::FrequencySetting>(f)).data();
}

const char* hpce_intervention_name(hpce_intervention i) {
  return policy::to_string(static_cast<policy::Intervention>(i)).data();
}

hpce_status hpce_benchmarks_load(const char* path, hpce_benchmarks** out) {
  return guard([&] {
    need_out(out, "out") =
        new hpce_benchmarks{policy::load_benchmark_table(need(path, "path"))};
  });
}

hpce_status hpce_benchmarks_from_csv(const char* text, hpce_benchmarks** out) {
  return guard([&] {
    std::istringstream in(need(text, "text"));
    need_out(out, "out") = new hpce_benchmarks{policy::read_benchmark_table(in)};
  });
}

hpce_status hpce_benchmarks_count(const hpce_benchmarks* t, size_t* out) {
  return guard([&] { need_out(out, "out") = need(t, "table").value.size(); });
}

hpce_status hpce_benchmarks_get(const hpce_benchmarks* t, size_t index,
                                hpce_benchmark* out) {
  return guard([&] {
    const auto& v = need(t, "table").value;
    check_index(index, v.size());
    const auto& b = v[index];
    need_out(out, "out") = {b.app_name.c_str(), b.nodes,
                            static_cast<hpce_intervention>(b.intervention),
                            b.perf_ratio, b.energy_ratio};
  });
}

void hpce_benchmarks_free(hpce_benchmarks* t) { delete t; }

hpce_status hpce_derived_ratios(const hpce_benchmark* b, hpce_ratios* out) {
  return guard([&] {
    const auto r = policy::derived_ratios(to_benchmark(need(b, "benchmark")));
    need_out(out, "out") = {r.perf_loss, r.energy_saving, r.power_ratio};
  });
}

hpce_status hpce_recommend(const hpce_benchmark* b, double threshold,
                           hpce_decision* out) {
  return guard([&] {
    const auto& src = need(b, "benchmark");
    auto d = to_c(policy::recommend(to_benchmark(src), policy::PolicyRule{threshold}));
    d.app_name = src.app_name;
    need_out(out, "out") = d;
  });
}

hpce_status hpce_fleet_ratios(const hpce_benchmarks* t, const char* const* apps,
                              const double* weights, size_t n, double threshold,
                              hpce_fleet** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    const auto& table = need(t, "table").value;
    std::map<std::string, double> w;
    if (n == 0) {
      w = policy::equal_weights(table);
    } else {
      if (apps == nullptr || weights == nullptr) throw ArgumentError("weights are NULL");
      for (size_t i = 0; i < n; ++i) {
        if (apps[i] == nullptr) throw ArgumentError("app name is NULL");
        if (!w.emplace(apps[i], weights[i]).second) {
          fail(ErrorKind::Validation, std::string("duplicate weight for '") + apps[i] + "'");
        }
      }
    }
    dst = new hpce_fleet{policy::fleet_ratios(table, w, policy::PolicyRule{threshold})};
  });
}

hpce_status hpce_fleet_power_ratio(const hpce_fleet* f, double* out) {
  return guard([&] { need_out(out, "out") = need(f, "fleet").value.fleet_power_ratio; });
}

hpce_status hpce_fleet_throughput_ratio(const hpce_fleet* f, double* out) {
  return guard([&] {
    need_out(out, "out") = need(f, "fleet").value.fleet_throughput_ratio;
  });
}

hpce_status hpce_fleet_decision_count(const hpce_fleet* f, size_t* out) {
  return guard([&] { need_out(out, "out") = need(f, "fleet").value.decisions.size(); });
}

hpce_status hpce_fleet_decision(const hpce_fleet* f, size_t index,
                                hpce_decision* out) {
  return guard([&] {
    const auto& v = need(f, "fleet").value.decisions;
    check_index(index, v.size());
    need_out(out, "out") = to_c(v[index]);
  });
}

void hpce_fleet_free(hpce_fleet* f) { delete f; }

// ---- telemetry -----------------------------------------------------------

hpce_status hpce_series_load(const char* path, hpce_series** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_series{telemetry::parse_series(need(path, "path"))};
  });
}

hpce_status hpce_series_from_csv(const char* text, hpce_series** out) {
  return guard([&] {
    std::istringstream in(need(text, "text"));
    need_out(out, "out") = new hpce_series{telemetry::read_series(in)};
  });
}

hpce_status hpce_series_create(const hpce_time* times, const double* power_kw,
                               size_t n, hpce_series** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    if (n > 0 && (times == nullptr || power_kw == nullptr)) {
      throw ArgumentError("series arrays are NULL");
    }
    std::vector<telemetry::Sample> samples;
    for (size_t i = 0; i < n; ++i) samples.push_back({times[i], power_kw[i]});
    dst = new hpce_series{telemetry::PowerSeries(std::move(samples))};
  });
}

hpce_status hpce_series_to_csv(const hpce_series* s, char** out) {
  return guard([&] {
    std::ostringstream ss;
    telemetry::write_series(ss, need(s, "series").value);
    need_out(out, "out") = dup_string(ss.str());
  });
}

hpce_status hpce_series_save(const hpce_series* s, const char* path) {
  return guard([&] {
    std::ostringstream ss;
    telemetry::write_series(ss, need(s, "series").value);
    io::write_file(need(path, "path"), ss.str());
  });
}

hpce_status hpce_series_size(const hpce_series* s, size_t* out) {
  return guard([&] { need_out(out, "out") = need(s, "series").value.size(); });
}

hpce_status hpce_series_sample(const hpce_series* s, size_t index,
                               hpce_time* time, double* power_kw) {
  return guard([&] {
    const auto& v = need(s, "series").value.samples();
    check_index(index, v.size());
    need_out(time, "time") = v[index].time;
    need_out(power_kw, "power_kw") = v[index].power_kw;
  });
}

void hpce_series_free(hpce_series* s) { delete s; }

hpce_status hpce_synth_series(const hpce_segment* segments, size_t n,
                              uint64_t seed, hpce_time start, hpce_series** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    if (n > 0 && segments == nullptr) throw ArgumentError("segments is NULL");
    std::vector<telemetry::Segment> segs;
    for (size_t i = 0; i < n; ++i) {
      segs.push_back({segments[i].duration_hours * 3600.0, segments[i].n_samples,
                      segments[i].mean_kw, segments[i].noise_sd_kw});
    }
    dst = new hpce_series{telemetry::synth_series(segs, seed, start)};
  });
}

hpce_status hpce_synth_from_recipe(const char* recipe_path, hpce_series** out) {
  return guard([&] {
    auto& dst = need_out(out, "out");
    const auto recipe = io::recipe_from_json(io::read_file(need(recipe_path, "path")));
    dst = new hpce_series{
        telemetry::synth_series(recipe.segments, recipe.seed, recipe.start)};
  });
}

hpce_status hpce_window_mean(const hpce_series* s, hpce_time start, hpce_time end,
                             hpce_window* out) {
  return guard([&] {
    need_out(out, "out") = to_c(telemetry::window_mean(need(s, "series").value, start, end));
  });
}

hpce_status hpce_intervention_impact(const hpce_series* s, hpce_time change_time,
                                     int64_t guard_gap_seconds,
                                     hpce_intervention_report* out) {
  return guard([&] {
    const auto r = telemetry::intervention_impact(need(s, "series").value,
                                                  change_time, guard_gap_seconds);
    need_out(out, "out") = {r.change_time, to_c(r.before), to_c(r.after),
                            r.delta_kw, r.pct_change};
  });
}

hpce_status hpce_detect_changepoint(const hpce_series* s, hpce_changepoint* out) {
  return guard([&] {
    const auto c = telemetry::detect_changepoint(need(s, "series").value);
    need_out(out, "out") = {c.index, c.change_time, c.score};
  });
}

// ---- simulator -----------------------------------------------------------

hpce_status hpce_scenario_load(const char* path, hpce_scenario** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_scenario{io::load_scenario(need(path, "path"))};
  });
}

hpce_status hpce_scenario_from_json(const char* json, const char* base_dir,
                                    hpce_scenario** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_scenario{
        io::scenario_from_json(need(json, "json"), base_dir ? base_dir : ".")};
  });
}

hpce_status hpce_scenario_clone(const hpce_scenario* c, hpce_scenario** out) {
  return guard([&] { need_out(out, "out") = new hpce_scenario{need(c, "scenario").value}; });
}

hpce_status hpce_scenario_set_threshold(hpce_scenario* c, double threshold) {
  return guard([&] {
    auto& cfg = need_out(c, "scenario").value;
    const policy::PolicyRule rule{threshold};
    rule.validate();
    cfg.rule = rule;
  });
}

hpce_status hpce_scenario_clear_rule(hpce_scenario* c) {
  return guard([&] { need_out(c, "scenario").value.rule.reset(); });
}

hpce_status hpce_scenario_set_bios_factor(hpce_scenario* c, double factor) {
  return guard([&] {
    auto copy = need(c, "scenario").value;
    copy.bios_factor = factor;
    copy.validate();
    c->value = std::move(copy);
  });
}

hpce_status hpce_scenario_set_utilization(hpce_scenario* c, double utilization) {
  return guard([&] {
    auto copy = need(c, "scenario").value;
    copy.utilization = utilization;
    copy.validate();
    c->value = std::move(copy);
  });
}

void hpce_scenario_free(hpce_scenario* c) { delete c; }

hpce_status hpce_run_scenario(const hpce_scenario* c, hpce_result** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_result{sim::run_scenario(need(c, "scenario").value)};
  });
}

hpce_status hpce_sweep_threshold(const hpce_scenario* c, const double* thresholds,
                                 size_t n, double* sorted_thresholds,
                                 hpce_result** out) {
  return guard([&] {
    if (n > 0 && (thresholds == nullptr || out == nullptr)) {
      throw ArgumentError("sweep arrays are NULL");
    }
    auto points = sim::sweep_threshold(need(c, "scenario").value,
                                       std::vector<double>(thresholds, thresholds + n));
    std::vector<hpce_result*> made;
    try {
      for (auto& p : points) made.push_back(new hpce_result{std::move(p.result)});
    } catch (...) {
      for (auto* r : made) delete r;
      throw;
    }
    for (size_t i = 0; i < n; ++i) {
      out[i] = made[i];
      if (sorted_thresholds != nullptr) sorted_thresholds[i] = points[i].threshold;
    }
  });
}

hpce_status hpce_compare_results(const hpce_result* a, const hpce_result* b,
                                 hpce_delta* out) {
  return guard([&] {
    const auto d = sim::compare_scenarios(need(a, "a").value, need(b, "b").value);
    need_out(out, "out") = {d.power_kw, d.pct_power, d.energy_kwh, d.emissions_kg,
                            d.throughput};
  });
}

hpce_status hpce_result_duration_hours(const hpce_result* r, double* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.duration_hours; });
}

hpce_status hpce_result_mean_power_kw(const hpce_result* r, double* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.mean_power_kw; });
}

hpce_status hpce_result_energy_kwh(const hpce_result* r, double* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.energy_kwh; });
}

hpce_status hpce_result_emissions(const hpce_result* r, hpce_emissions* out) {
  return guard([&] { need_out(out, "out") = to_c(need(r, "result").value.emissions); });
}

hpce_status hpce_result_fleet_power_ratio(const hpce_result* r, double* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.fleet_power_ratio; });
}

hpce_status hpce_result_throughput_index(const hpce_result* r, double* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.throughput_index; });
}

hpce_status hpce_result_breakdown(const hpce_result* r, hpce_breakdown** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_breakdown{need(r, "result").value.breakdown};
  });
}

hpce_status hpce_result_decision_count(const hpce_result* r, size_t* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.decisions.size(); });
}

hpce_status hpce_result_decision(const hpce_result* r, size_t index,
                                 hpce_decision* out) {
  return guard([&] {
    const auto& v = need(r, "result").value.decisions;
    check_index(index, v.size());
    need_out(out, "out") = to_c(v[index]);
  });
}

hpce_status hpce_result_warning_count(const hpce_result* r, size_t* out) {
  return guard([&] { need_out(out, "out") = need(r, "result").value.warnings.size(); });
}

hpce_status hpce_result_warning(const hpce_result* r, size_t index,
                                const char** out) {
  return guard([&] {
    const auto& v = need(r, "result").value.warnings;
    check_index(index, v.size());
    need_out(out, "out") = v[index].c_str();
  });
}

hpce_status hpce_result_to_json(const hpce_result* r, char** out) {
  return guard([&] {
    need_out(out, "out") = dup_string(io::result_to_json(need(r, "result").value));
  });
}

hpce_status hpce_result_from_json(const char* json, hpce_result** out) {
  return guard([&] {
    need_out(out, "out") = new hpce_result{io::result_from_json(need(json, "json"))};
  });
}

hpce_status hpce_result_equal(const hpce_result* a, const hpce_result* b, int* out) {
  return guard([&] {
    need_out(out, "out") = need(a, "a").value == need(b, "b").value ? 1 : 0;
  });
}

void hpce_result_free(hpce_result* r) { delete r; }

}  // extern "C"
