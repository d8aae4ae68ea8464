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

// hpcenergy command-line front end. Talks to the library only through the C
// interface in hpcenergy/hpcenergy.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpcenergy/hpcenergy.h"

namespace {

using ordered_json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kDomain = 1, kIo = 2 };

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(hpce_status s) {
  return (s == HPCE_E_PARSE || s == HPCE_E_IO) ? kIo : kDomain;
}

void check(hpce_status s) {
  if (s != HPCE_OK) {
    throw Failure{exit_code_for(s),
                  std::string(hpce_status_name(s)) + ": " + hpce_last_error()};
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Model = std::unique_ptr<hpce_model, Deleter<hpce_model, hpce_model_free>>;
using Breakdown =
    std::unique_ptr<hpce_breakdown, Deleter<hpce_breakdown, hpce_breakdown_free>>;
using Benchmarks =
    std::unique_ptr<hpce_benchmarks, Deleter<hpce_benchmarks, hpce_benchmarks_free>>;
using Fleet = std::unique_ptr<hpce_fleet, Deleter<hpce_fleet, hpce_fleet_free>>;
using Series = std::unique_ptr<hpce_series, Deleter<hpce_series, hpce_series_free>>;
using Profile = std::unique_ptr<hpce_profile, Deleter<hpce_profile, hpce_profile_free>>;
using Scenario =
    std::unique_ptr<hpce_scenario, Deleter<hpce_scenario, hpce_scenario_free>>;
using Result = std::unique_ptr<hpce_result, Deleter<hpce_result, hpce_result_free>>;

std::string take(char* s) {
  std::string out(s);
  hpce_string_free(s);
  return out;
}

std::string data_dir() {
  if (const char* env = std::getenv("HPCENERGY_DATA")) return env;
  return HPCENERGY_DATA_DIR;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  // Avoid printing "-0.0".
  if (buf[0] == '-') {
    bool zero = true;
    for (const char* p = buf + 1; *p; ++p) zero = zero && (*p == '0' || *p == '.');
    if (zero) return buf + 1;
  }
  return buf;
}
std::string kw(double v) { return fmt("%.1f", v); }
std::string ratio(double v) { return fmt("%.4f", v); }
std::string pct(double fraction) { return fmt("%.1f", fraction * 100.0) + "%"; }

std::string pad(const std::string& s, std::size_t width, bool right = false) {
  // Byte length over-counts multi-byte UTF-8; count code points instead.
  std::size_t len = 0;
  for (unsigned char c : s) len += (c & 0xC0) != 0x80;
  if (len >= width) return s;
  const std::string fill(width - len, ' ');
  return right ? fill + s : s + fill;
}

std::string time_str(hpce_time t) {
  char buf[32];
  check(hpce_format_time(t, buf, sizeof(buf)));
  return buf;
}

hpce_time parse_time(const std::string& text) {
  hpce_time t = 0;
  check(hpce_parse_time(text.c_str(), &t));
  return t;
}

// "3600", "3600s", "90m", "48h", "2d" -> seconds.
int64_t parse_duration(const std::string& text) {
  if (text.empty()) throw Failure{kDomain, "empty duration"};
  double scale = 1.0;
  std::string number = text;
  switch (text.back()) {
    case 's': number.pop_back(); break;
    case 'm': scale = 60.0; number.pop_back(); break;
    case 'h': scale = 3600.0; number.pop_back(); break;
    case 'd': scale = 86400.0; number.pop_back(); break;
    default: break;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(number, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != number.size() || number.empty() || !(v >= 0.0)) {
    throw Failure{kDomain, "invalid duration '" + text + "'"};
  }
  return static_cast<int64_t>(std::llround(v * scale));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIo, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- power -----------------------------------------------------------------

struct PowerArgs {
  std::string model_file;
  double utilization = 1.0;
  std::vector<std::string> factors;
};

void run_power(const PowerArgs& a, bool json) {
  hpce_model* raw = nullptr;
  if (a.model_file.empty()) {
    check(hpce_model_reference_archer2(&raw));
  } else {
    check(hpce_model_load(a.model_file.c_str(), &raw));
  }
  Model model(raw);
  for (const auto& f : a.factors) {
    // component=value[:dynamic|:whole]
    const auto eq = f.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Failure{kDomain, "--factor expects component=value[:dynamic], got '" + f + "'"};
    }
    std::string component = f.substr(0, eq);
    std::string value = f.substr(eq + 1);
    hpce_factor_mode mode = HPCE_FACTOR_WHOLE_DRAW;
    if (const auto colon = value.find(':'); colon != std::string::npos) {
      const auto m = value.substr(colon + 1);
      if (m == "dynamic") {
        mode = HPCE_FACTOR_DYNAMIC_ONLY;
      } else if (m != "whole") {
        throw Failure{kDomain, "unknown factor mode '" + m + "'"};
      }
      value.resize(colon);
    }
    if (component == "compute") {
      const char* name = nullptr;
      check(hpce_model_compute_component(model.get(), &name));
      component = name;
    }
    double factor = 0.0;
    try {
      std::size_t used = 0;
      factor = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Failure{kDomain, "invalid factor value '" + value + "'"};
    }
    hpce_model* scaled = nullptr;
    check(hpce_model_apply_factor(model.get(), component.c_str(), factor, mode,
                                  &scaled));
    model.reset(scaled);
  }

  hpce_breakdown* braw = nullptr;
  check(hpce_system_power(model.get(), a.utilization, &braw));
  Breakdown b(braw);
  if (json) {
    char* s = nullptr;
    check(hpce_breakdown_to_json(b.get(), &s));
    std::cout << take(s);
    return;
  }
  const char* name = nullptr;
  check(hpce_model_name(model.get(), &name));
  double total = 0.0;
  std::size_t n = 0;
  check(hpce_breakdown_total(b.get(), &total));
  check(hpce_breakdown_count(b.get(), &n));
  std::cout << name << " at utilization " << ratio(a.utilization) << "\n";
  std::cout << pad("component", 30) << pad("count", 8, true) << pad("kW", 12, true)
            << pad("share", 9, true) << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    const char* cname = nullptr;
    double value = 0.0;
    hpce_component comp{};
    check(hpce_breakdown_entry(b.get(), i, &cname, &value));
    check(hpce_model_component(model.get(), i, &comp));
    std::cout << pad(cname, 30) << pad(std::to_string(comp.count), 8, true)
              << pad(kw(value), 12, true)
              << pad(total > 0 ? pct(value / total) : "-", 9, true) << "\n";
  }
  std::cout << pad("total", 38) << pad(kw(total), 12, true)
            << pad(total > 0 ? pct(1.0) : "-", 9, true) << "\n";
}

// ---- policy ----------------------------------------------------------------

struct PolicyArgs {
  std::string benchmarks_file;
  double threshold = 0.10;
  std::string weights_file;
};

void run_policy(const PolicyArgs& a, bool json) {
  const auto path =
      a.benchmarks_file.empty() ? data_dir() + "/table4_freq.csv" : a.benchmarks_file;
  hpce_benchmarks* traw = nullptr;
  check(hpce_benchmarks_load(path.c_str(), &traw));
  Benchmarks table(traw);
  std::size_t n = 0;
  check(hpce_benchmarks_count(table.get(), &n));

  std::vector<hpce_benchmark> rows(n);
  std::size_t n_freq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    check(hpce_benchmarks_get(table.get(), i, &rows[i]));
    n_freq += rows[i].intervention == HPCE_FREQ_CAP_2000;
  }

  std::vector<std::string> app_names;
  std::vector<const char*> apps;
  std::vector<double> weights;
  if (!a.weights_file.empty()) {
    nlohmann::json w;
    try {
      w = nlohmann::json::parse(read_text(a.weights_file));
    } catch (const nlohmann::json::exception& e) {
      throw Failure{kIo, "weights file: " + std::string(e.what())};
    }
    if (!w.is_object()) throw Failure{kIo, "weights file must be a JSON object"};
    for (const auto& [app, value] : w.items()) {
      if (!value.is_number()) throw Failure{kIo, "weight for '" + app + "' is not a number"};
      app_names.push_back(app);
      weights.push_back(value.get<double>());
    }
    for (const auto& s : app_names) apps.push_back(s.c_str());
  }

  Fleet fleet;
  if (n_freq > 0) {
    hpce_fleet* fraw = nullptr;
    check(hpce_fleet_ratios(table.get(), apps.empty() ? nullptr : apps.data(),
                            weights.empty() ? nullptr : weights.data(), apps.size(),
                            a.threshold, &fraw));
    fleet.reset(fraw);
  } else if (!apps.empty()) {
    throw Failure{kDomain, "weights given but the table has no freq_cap_2000 rows"};
  }

  ordered_json doc;
  doc["threshold"] = a.threshold;
  doc["benchmarks"] = ordered_json::array();
  std::size_t reverted = 0;
  std::size_t decision_index = 0;
  std::ostringstream table_out;
  table_out << pad("app", 24) << pad("nodes", 6, true) << pad("perf", 8, true)
            << pad("energy", 8, true) << pad("power", 8, true)
            << pad("perf_loss", 11, true) << pad("e_saving", 10, true) << "  "
            << pad("intervention", 17) << "setting\n";
  for (const auto& b : rows) {
    hpce_ratios r{};
    check(hpce_derived_ratios(&b, &r));
    ordered_json row;
    row["app_name"] = b.app_name;
    row["nodes"] = b.nodes;
    row["intervention"] = hpce_intervention_name(b.intervention);
    row["perf_ratio"] = b.perf_ratio;
    row["energy_ratio"] = b.energy_ratio;
    row["perf_loss"] = r.perf_loss;
    row["energy_saving"] = r.energy_saving;
    row["power_ratio"] = r.power_ratio;
    std::string setting = "-";
    if (b.intervention == HPCE_FREQ_CAP_2000) {
      hpce_decision d{};
      check(hpce_fleet_decision(fleet.get(), decision_index++, &d));
      row["default_setting"] = hpce_frequency_name(d.default_setting);
      row["reverted"] = d.reverted != 0;
      reverted += d.reverted != 0;
      setting = std::string(hpce_frequency_name(d.default_setting)) +
                (d.reverted ? " (reverted)" : "");
    }
    doc["benchmarks"].push_back(std::move(row));
    table_out << pad(b.app_name, 24) << pad(std::to_string(b.nodes), 6, true)
              << pad(ratio(b.perf_ratio), 8, true)
              << pad(ratio(b.energy_ratio), 8, true)
              << pad(ratio(r.power_ratio), 8, true) << pad(pct(r.perf_loss), 11, true)
              << pad(pct(r.energy_saving), 10, true) << "  "
              << pad(hpce_intervention_name(b.intervention), 17) << setting << "\n";
  }
  doc["reverted_count"] = reverted;
  if (fleet) {
    double power = 0.0, throughput = 0.0;
    check(hpce_fleet_power_ratio(fleet.get(), &power));
    check(hpce_fleet_throughput_ratio(fleet.get(), &throughput));
    doc["fleet_power_ratio"] = power;
    doc["fleet_throughput_ratio"] = throughput;
    table_out << "\nthreshold " << ratio(a.threshold) << ": reverted " << reverted
              << " of " << n_freq << "\n"
              << "fleet power ratio      " << ratio(power) << "\n"
              << "fleet throughput ratio " << ratio(throughput) << "\n";
  }
  if (json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << table_out.str();
  }
}

// ---- telemetry -------------------------------------------------------------

struct TelemetryArgs {
  std::string series_file;
  std::string change_time;
  bool detect = false;
  std::vector<std::string> window;
  std::string gap = "0";
};

ordered_json window_json(const hpce_window& w) {
  ordered_json j;
  j["start"] = time_str(w.start);
  j["end"] = time_str(w.end);
  j["count"] = w.count;
  j["mean_kw"] = w.mean_kw;
  j["stddev_kw"] = w.stddev_kw;
  return j;
}

std::string window_line(const char* label, const hpce_window& w) {
  return pad(label, 8) + time_str(w.start) + " .. " + time_str(w.end) + "  n=" +
         pad(std::to_string(w.count), 6) + "  mean " + pad(kw(w.mean_kw), 8, true) +
         " kW  sd " + pad(kw(w.stddev_kw), 6, true) + " kW\n";
}

void run_telemetry(const TelemetryArgs& a, bool json) {
  const int modes = !a.change_time.empty() + a.detect + !a.window.empty();
  if (modes != 1) {
    throw Failure{kDomain, "give exactly one of --change-time, --detect or --window"};
  }
  hpce_series* sraw = nullptr;
  check(hpce_series_load(a.series_file.c_str(), &sraw));
  Series series(sraw);

  ordered_json doc;
  std::ostringstream out;
  if (!a.window.empty()) {
    hpce_window w{};
    check(hpce_window_mean(series.get(), parse_time(a.window.at(0)),
                           parse_time(a.window.at(1)), &w));
    doc["window"] = window_json(w);
    out << window_line("window", w);
  } else {
    hpce_time change = 0;
    if (a.detect) {
      hpce_changepoint cp{};
      check(hpce_detect_changepoint(series.get(), &cp));
      change = cp.change_time;
      doc["changepoint"] = {{"index", cp.index},
                            {"change_time", time_str(cp.change_time)},
                            {"score", cp.score}};
      out << "changepoint at sample " << cp.index << " (" << time_str(cp.change_time)
          << "), score " << ratio(cp.score) << "\n";
    } else {
      change = parse_time(a.change_time);
    }
    const int64_t gap = parse_duration(a.gap);
    hpce_intervention_report r{};
    check(hpce_intervention_impact(series.get(), change, gap, &r));
    ordered_json rep;
    rep["change_time"] = time_str(r.change_time);
    rep["guard_gap_seconds"] = gap;
    rep["before"] = window_json(r.before);
    rep["after"] = window_json(r.after);
    rep["delta_kw"] = r.delta_kw;
    rep["pct_change"] = r.pct_change;
    doc["report"] = std::move(rep);
    out << "change at " << time_str(r.change_time) << ", guard gap " << gap << " s\n"
        << window_line("before", r.before) << window_line("after", r.after)
        << "delta " << kw(r.delta_kw) << " kW (" << pct(r.pct_change) << ")\n";
  }
  if (json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.str();
  }
}

// ---- emissions -------------------------------------------------------------

struct EmissionsArgs {
  double intensity = -1.0;
  bool have_intensity = false;
  std::string profile_file;
  double power_kw = 0.0;
  double hours = 1.0;
  std::string embodied_file;
  std::string start;
};

void run_emissions(const EmissionsArgs& a, bool json) {
  if (a.have_intensity == !a.profile_file.empty()) {
    throw Failure{kDomain, "give exactly one of --intensity or --profile"};
  }
  hpce_profile* praw = nullptr;
  hpce_time start = a.start.empty() ? 0 : parse_time(a.start);
  if (a.have_intensity) {
    check(hpce_profile_constant(a.intensity, &praw));
  } else {
    check(hpce_profile_load_csv(a.profile_file.c_str(), &praw));
  }
  Profile profile(praw);
  if (!a.have_intensity && a.start.empty()) {
    check(hpce_profile_first_time(profile.get(), &start));
  }
  if (!(a.hours > 0.0)) throw Failure{kDomain, "--hours must be > 0"};

  // The regime is judged from the mean intensity over the requested period.
  double mean_intensity = a.intensity;
  if (!a.have_intensity) {
    const hpce_interval_energy probe{
        start, start + std::max<int64_t>(1, std::llround(a.hours * 3600.0)), 1000.0};
    check(hpce_scope2_emissions(&probe, 1, profile.get(), &mean_intensity));
  }
  hpce_scenario_kind kind{};
  hpce_objective objective{};
  check(hpce_classify_scenario(mean_intensity, &kind));
  check(hpce_recommended_objective(kind, &objective));

  hpce_embodied embodied{};
  if (!a.embodied_file.empty()) check(hpce_embodied_load(a.embodied_file.c_str(), &embodied));
  hpce_emissions e{};
  int unset = 0;
  check(hpce_lifetime_emissions(a.power_kw, a.hours, start, profile.get(),
                                a.embodied_file.empty() ? nullptr : &embodied, &e,
                                &unset));
  const double energy = a.power_kw * a.hours;

  if (json) {
    ordered_json doc;
    doc["intensity_g_per_kwh"] = mean_intensity;
    doc["scenario"] = hpce_scenario_kind_name(kind);
    doc["objective"] = hpce_objective_name(objective);
    doc["power_kw"] = a.power_kw;
    doc["hours"] = a.hours;
    doc["energy_kwh"] = energy;
    doc["emissions"] = {{"scope2_kg", e.scope2_kg},
                        {"scope3_kg", e.scope3_kg},
                        {"total_kg", e.total_kg}};
    doc["warnings"] = ordered_json::array();
    if (unset) doc["warnings"].push_back("embodied emissions not supplied; scope3 reported as 0");
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << "carbon intensity   " << kw(mean_intensity) << " gCO2/kWh\n"
            << "scenario           " << hpce_scenario_kind_name(kind) << "\n"
            << "objective          " << hpce_objective_name(objective) << "\n"
            << "energy             " << kw(energy) << " kWh\n"
            << "scope2             " << kw(e.scope2_kg) << " kg\n"
            << "scope3             " << kw(e.scope3_kg) << " kg\n"
            << "total              " << kw(e.total_kg) << " kg\n";
  if (unset) std::cout << "warning: embodied emissions not supplied; scope3 reported as 0\n";
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::string config_file;
  std::vector<double> sweep;
  std::string baseline_file;
};

Scenario load_scenario(const std::string& path) {
  hpce_scenario* raw = nullptr;
  check(hpce_scenario_load(path.c_str(), &raw));
  return Scenario(raw);
}

Result run(const hpce_scenario* c) {
  hpce_result* raw = nullptr;
  check(hpce_run_scenario(c, &raw));
  return Result(raw);
}

ordered_json result_json(const hpce_result* r) {
  char* s = nullptr;
  check(hpce_result_to_json(r, &s));
  return ordered_json::parse(take(s));
}

std::size_t reverted_count(const hpce_result* r) {
  std::size_t n = 0, reverted = 0;
  check(hpce_result_decision_count(r, &n));
  for (std::size_t i = 0; i < n; ++i) {
    hpce_decision d{};
    check(hpce_result_decision(r, i, &d));
    reverted += d.reverted != 0;
  }
  return reverted;
}

void print_result(const hpce_result* r) {
  double power = 0, energy = 0, fleet = 0, throughput = 0, hours = 0;
  hpce_emissions e{};
  check(hpce_result_mean_power_kw(r, &power));
  check(hpce_result_energy_kwh(r, &energy));
  check(hpce_result_fleet_power_ratio(r, &fleet));
  check(hpce_result_throughput_index(r, &throughput));
  check(hpce_result_duration_hours(r, &hours));
  check(hpce_result_emissions(r, &e));
  std::cout << "duration           " << kw(hours) << " h\n"
            << "mean power         " << kw(power) << " kW\n"
            << "energy             " << kw(energy) << " kWh\n"
            << "scope2             " << kw(e.scope2_kg) << " kg\n"
            << "scope3             " << kw(e.scope3_kg) << " kg\n"
            << "total emissions    " << kw(e.total_kg) << " kg\n"
            << "fleet power ratio  " << ratio(fleet) << "\n"
            << "throughput index   " << ratio(throughput) << "\n";

  hpce_breakdown* braw = nullptr;
  check(hpce_result_breakdown(r, &braw));
  Breakdown b(braw);
  std::size_t n = 0;
  check(hpce_breakdown_count(b.get(), &n));
  std::cout << "\n" << pad("component", 30) << pad("kW", 12, true) << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    double value = 0;
    check(hpce_breakdown_entry(b.get(), i, &name, &value));
    std::cout << pad(name, 30) << pad(kw(value), 12, true) << "\n";
  }

  std::size_t nd = 0;
  check(hpce_result_decision_count(r, &nd));
  if (nd > 0) {
    std::cout << "\n" << pad("app", 24) << pad("perf_loss", 11, true)
              << pad("e_saving", 10, true) << "  setting\n";
    for (std::size_t i = 0; i < nd; ++i) {
      hpce_decision d{};
      check(hpce_result_decision(r, i, &d));
      std::cout << pad(d.app_name, 24) << pad(pct(d.perf_loss), 11, true)
                << pad(pct(d.energy_saving), 10, true) << "  "
                << hpce_frequency_name(d.default_setting)
                << (d.reverted ? " (reverted)" : "") << "\n";
    }
  }
  std::size_t nw = 0;
  check(hpce_result_warning_count(r, &nw));
  for (std::size_t i = 0; i < nw; ++i) {
    const char* w = nullptr;
    check(hpce_result_warning(r, i, &w));
    std::cout << "warning: " << w << "\n";
  }
}

void run_simulate(const SimulateArgs& a, bool json) {
  const auto path = a.config_file.empty() ? data_dir() + "/scenarios/baseline.json"
                                          : a.config_file;
  auto config = load_scenario(path);

  if (!a.sweep.empty()) {
    std::vector<hpce_result*> raw(a.sweep.size(), nullptr);
    std::vector<double> sorted(a.sweep.size());
    check(hpce_sweep_threshold(config.get(), a.sweep.data(), a.sweep.size(),
                               sorted.data(), raw.data()));
    std::vector<Result> results;
    for (auto* r : raw) results.emplace_back(r);
    if (json) {
      ordered_json doc;
      doc["sweep"] = ordered_json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        doc["sweep"].push_back(
            {{"threshold", sorted[i]}, {"result", result_json(results[i].get())}});
      }
      std::cout << doc.dump(2) << "\n";
      return;
    }
    std::cout << pad("threshold", 10) << pad("power_kW", 12, true)
              << pad("energy_kWh", 14, true) << pad("emissions_kg", 14, true)
              << pad("fleet_power", 13, true) << pad("throughput", 12, true)
              << pad("reverted", 10, true) << "\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto* r = results[i].get();
      double power = 0, energy = 0, fleet = 0, throughput = 0;
      hpce_emissions e{};
      check(hpce_result_mean_power_kw(r, &power));
      check(hpce_result_energy_kwh(r, &energy));
      check(hpce_result_fleet_power_ratio(r, &fleet));
      check(hpce_result_throughput_index(r, &throughput));
      check(hpce_result_emissions(r, &e));
      std::cout << pad(ratio(sorted[i]), 10) << pad(kw(power), 12, true)
                << pad(kw(energy), 14, true) << pad(kw(e.total_kg), 14, true)
                << pad(ratio(fleet), 13, true) << pad(ratio(throughput), 12, true)
                << pad(std::to_string(reverted_count(r)), 10, true) << "\n";
    }
    return;
  }

  auto result = run(config.get());
  if (a.baseline_file.empty()) {
    if (json) {
      char* s = nullptr;
      check(hpce_result_to_json(result.get(), &s));
      std::cout << take(s);
    } else {
      print_result(result.get());
    }
    return;
  }

  auto base_config = load_scenario(a.baseline_file);
  auto base = run(base_config.get());
  hpce_delta d{};
  check(hpce_compare_results(base.get(), result.get(), &d));
  if (json) {
    ordered_json doc;
    doc["baseline"] = result_json(base.get());
    doc["scenario"] = result_json(result.get());
    doc["delta"] = {{"power_kw", d.power_kw},
                    {"pct_power", d.pct_power},
                    {"energy_kwh", d.energy_kwh},
                    {"emissions_kg", d.emissions_kg},
                    {"throughput", d.throughput}};
    std::cout << doc.dump(2) << "\n";
    return;
  }
  print_result(result.get());
  std::cout << "\nversus baseline " << a.baseline_file << "\n"
            << "power              " << kw(d.power_kw) << " kW (" << pct(d.pct_power)
            << ")\n"
            << "energy             " << kw(d.energy_kwh) << " kWh\n"
            << "emissions          " << kw(d.emissions_kg) << " kg\n"
            << "throughput         " << ratio(d.throughput) << "\n";
}

// ---- synth -----------------------------------------------------------------

struct SynthArgs {
  std::string recipe;
  std::vector<std::string> segments;
  uint64_t seed = 1;
  std::string start = "2022-01-01T00:00:00Z";
  std::string out;
};

void run_synth(const SynthArgs& a) {
  if (a.recipe.empty() == a.segments.empty()) {
    throw Failure{kDomain, "give either --recipe or one or more --segment"};
  }
  hpce_series* raw = nullptr;
  if (!a.recipe.empty()) {
    check(hpce_synth_from_recipe(a.recipe.c_str(), &raw));
  } else {
    std::vector<hpce_segment> segs;
    for (const auto& text : a.segments) {
      // hours,n_samples,mean_kw,noise_sd_kw
      std::vector<std::string> parts;
      std::stringstream ss(text);
      for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
      if (parts.size() != 4) {
        throw Failure{kDomain, "--segment expects hours,n,mean_kw,sd_kw, got '" + text + "'"};
      }
      try {
        const long n = std::stol(parts[1]);
        if (n < 1) throw std::invalid_argument(parts[1]);
        segs.push_back({std::stod(parts[0]), static_cast<std::size_t>(n),
                        std::stod(parts[2]), std::stod(parts[3])});
      } catch (const std::exception&) {
        throw Failure{kDomain, "invalid --segment '" + text + "'"};
      }
    }
    check(hpce_synth_series(segs.data(), segs.size(), a.seed, parse_time(a.start), &raw));
  }
  Series series(raw);
  if (!a.out.empty()) {
    check(hpce_series_save(series.get(), a.out.c_str()));
    return;
  }
  char* csv = nullptr;
  check(hpce_series_to_csv(series.get(), &csv));
  std::cout << take(csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HPC power, energy, emissions and frequency-policy modeling"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  PowerArgs power;
  auto* power_cmd = app.add_subcommand("power", "System power breakdown");
  power_cmd->fallthrough();
  power_cmd->add_option("model", power.model_file,
                        "System model JSON (default: bundled ARCHER2 model)");
  power_cmd->add_option("-u,--utilization", power.utilization, "Utilization in [0,1]");
  power_cmd->add_option("--factor", power.factors,
                        "component=value[:dynamic|:whole]; 'compute' names the "
                        "compute component");

  PolicyArgs policy;
  auto* policy_cmd = app.add_subcommand("policy", "Frequency revert decisions");
  policy_cmd->fallthrough();
  policy_cmd->add_option("benchmarks", policy.benchmarks_file,
                         "Benchmark CSV (default: bundled table4_freq.csv)");
  policy_cmd->add_option("-t,--threshold", policy.threshold,
                         "Performance-loss threshold above which apps revert");
  policy_cmd->add_option("--weights", policy.weights_file,
                         "JSON object app -> weight (default: equal)");

  TelemetryArgs tele;
  auto* tele_cmd = app.add_subcommand("telemetry", "Power telemetry analysis");
  tele_cmd->fallthrough();
  tele_cmd->add_option("series", tele.series_file, "Telemetry CSV")->required();
  tele_cmd->add_option("--change-time", tele.change_time, "Intervention time (ISO-8601)");
  tele_cmd->add_flag("--detect", tele.detect, "Detect the change time");
  tele_cmd->add_option("--window", tele.window, "START END mean over [START, END)")
      ->expected(2);
  tele_cmd->add_option("--gap", tele.gap, "Guard gap, e.g. 3600, 90m, 48h, 2d");

  EmissionsArgs em;
  auto* em_cmd = app.add_subcommand("emissions", "Scope 2/3 emissions");
  em_cmd->fallthrough();
  auto* intensity_opt =
      em_cmd->add_option("--intensity", em.intensity, "Constant gCO2/kWh");
  em_cmd->add_option("--profile", em.profile_file, "Carbon intensity CSV");
  em_cmd->add_option("--power-kw", em.power_kw, "Mean power draw (kW)");
  em_cmd->add_option("--hours", em.hours, "Duration (h)");
  em_cmd->add_option("--embodied", em.embodied_file, "Embodied emissions JSON");
  em_cmd->add_option("--start", em.start, "Period start (ISO-8601)");

  SimulateArgs simulate;
  auto* sim_cmd = app.add_subcommand("simulate", "Scenario runs and threshold sweeps");
  sim_cmd->fallthrough();
  sim_cmd->add_option("config", simulate.config_file,
                      "Scenario JSON (default: bundled baseline)");
  sim_cmd->add_option("--sweep", simulate.sweep, "Thresholds t1,t2,...")->delimiter(',');
  sim_cmd->add_option("--baseline", simulate.baseline_file,
                      "Compare against this scenario");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthetic telemetry fixture");
  synth_cmd->fallthrough();
  synth_cmd->add_option("--recipe", synth.recipe, "Recipe JSON");
  synth_cmd->add_option("--segment", synth.segments, "hours,n_samples,mean_kw,sd_kw");
  synth_cmd->add_option("--seed", synth.seed, "RNG seed");
  synth_cmd->add_option("--start", synth.start, "First timestamp (ISO-8601)");
  synth_cmd->add_option("-o,--out", synth.out, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kIo;
  }

  const bool json = format == "json";
  try {
    if (*power_cmd) run_power(power, json);
    if (*policy_cmd) run_policy(policy, json);
    if (*tele_cmd) run_telemetry(tele, json);
    if (*em_cmd) {
      em.have_intensity = intensity_opt->count() > 0;
      run_emissions(em, json);
    }
    if (*sim_cmd) run_simulate(simulate, json);
    if (*synth_cmd) run_synth(synth);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
