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

/* C interface to the hpcenergy modeling library.
 *
 * Every function returns an hpce_status. On failure the message of the most
 * recent error on the calling thread is available from hpce_last_error().
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function; strings returned through `char**` are released
 * with hpce_string_free. Borrowed `const char*` results stay valid until the
 * owning handle is freed. */
#ifndef HPCENERGY_HPCENERGY_H_
#define HPCENERGY_HPCENERGY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define HPCE_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define HPCE_API __attribute__((visibility("default")))
#else
#  define HPCE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hpce_status {
  HPCE_OK = 0,
  HPCE_E_DOMAIN = 1,
  HPCE_E_VALIDATION = 2,
  HPCE_E_COVERAGE = 3,
  HPCE_E_NOT_FOUND = 4,
  HPCE_E_PARSE = 5,
  HPCE_E_IO = 6,
  HPCE_E_ARGUMENT = 7, /* null handle / out pointer, index out of range */
  HPCE_E_INTERNAL = 8
} hpce_status;

typedef int64_t hpce_time; /* seconds since the Unix epoch, UTC */

typedef struct hpce_model hpce_model;
typedef struct hpce_breakdown hpce_breakdown;
typedef struct hpce_profile hpce_profile;
typedef struct hpce_benchmarks hpce_benchmarks;
typedef struct hpce_fleet hpce_fleet;
typedef struct hpce_series hpce_series;
typedef struct hpce_scenario hpce_scenario;
typedef struct hpce_result hpce_result;

HPCE_API const char* hpce_last_error(void);
HPCE_API const char* hpce_status_name(hpce_status status);
HPCE_API const char* hpce_version(void);
HPCE_API void hpce_string_free(char* s);

HPCE_API hpce_status hpce_parse_time(const char* iso8601, hpce_time* out);
/* Writes "YYYY-MM-DDTHH:MM:SSZ" (20 characters plus NUL) into buf. */
HPCE_API hpce_status hpce_format_time(hpce_time t, char* buf, size_t size);

/* ---- power model ------------------------------------------------------- */

typedef enum hpce_load_response {
  HPCE_LOAD_LINEAR = 0,
  HPCE_LOAD_CONSTANT = 1
} hpce_load_response;

typedef enum hpce_factor_mode {
  HPCE_FACTOR_WHOLE_DRAW = 0,
  HPCE_FACTOR_DYNAMIC_ONLY = 1
} hpce_factor_mode;

typedef struct hpce_component {
  const char* name;
  long count;
  double idle_kw_per_unit;
  double loaded_kw_per_unit;
  hpce_load_response load_response;
} hpce_component;

HPCE_API hpce_status hpce_model_reference_archer2(hpce_model** out);
HPCE_API hpce_status hpce_model_create(const char* name,
                                       const hpce_component* components,
                                       size_t n, const char* compute_component,
                                       hpce_model** out);
HPCE_API hpce_status hpce_model_load(const char* path, hpce_model** out);
HPCE_API hpce_status hpce_model_from_json(const char* json, hpce_model** out);
HPCE_API hpce_status hpce_model_to_json(const hpce_model* model, char** out);
HPCE_API hpce_status hpce_model_save(const hpce_model* model, const char* path);
HPCE_API void hpce_model_free(hpce_model* model);

HPCE_API hpce_status hpce_model_name(const hpce_model* model, const char** out);
HPCE_API hpce_status hpce_model_compute_component(const hpce_model* model,
                                                  const char** out);
HPCE_API hpce_status hpce_model_component_count(const hpce_model* model,
                                                size_t* out);
HPCE_API hpce_status hpce_model_component(const hpce_model* model, size_t index,
                                          hpce_component* out);
HPCE_API hpce_status hpce_model_apply_factor(const hpce_model* model,
                                             const char* component,
                                             double factor,
                                             hpce_factor_mode mode,
                                             hpce_model** out);

HPCE_API hpce_status hpce_component_power(const hpce_component* component,
                                          double utilization, double* out_kw);
HPCE_API hpce_status hpce_system_power(const hpce_model* model,
                                       double utilization,
                                       hpce_breakdown** out);

HPCE_API hpce_status hpce_breakdown_total(const hpce_breakdown* b,
                                          double* out_kw);
HPCE_API hpce_status hpce_breakdown_count(const hpce_breakdown* b, size_t* out);
HPCE_API hpce_status hpce_breakdown_entry(const hpce_breakdown* b, size_t index,
                                          const char** name, double* kw);
HPCE_API hpce_status hpce_breakdown_to_json(const hpce_breakdown* b,
                                            char** out);
HPCE_API hpce_status hpce_breakdown_from_json(const char* json,
                                              hpce_breakdown** out);
HPCE_API void hpce_breakdown_free(hpce_breakdown* b);

/* ---- emissions --------------------------------------------------------- */

typedef enum hpce_scenario_kind {
  HPCE_SCOPE3_DOMINATED = 0,
  HPCE_BALANCED = 1,
  HPCE_SCOPE2_DOMINATED = 2
} hpce_scenario_kind;

typedef enum hpce_objective {
  HPCE_MAXIMIZE_APPLICATION_PERFORMANCE = 0,
  HPCE_BALANCE_PERFORMANCE_AND_ENERGY = 1,
  HPCE_MAXIMIZE_ENERGY_EFFICIENCY = 2
} hpce_objective;

typedef struct hpce_embodied {
  double total_kgco2e;
  double service_lifetime_hours;
} hpce_embodied;

typedef struct hpce_emissions {
  double scope2_kg;
  double scope3_kg;
  double total_kg;
} hpce_emissions;

typedef struct hpce_interval_energy {
  hpce_time start;
  hpce_time end;
  double kwh;
} hpce_interval_energy;

typedef struct hpce_efficiency {
  double per_nodeh;
  double per_kwh;
  double per_kgco2;
} hpce_efficiency;

HPCE_API hpce_status hpce_classify_scenario(double g_per_kwh,
                                            hpce_scenario_kind* out);
HPCE_API hpce_status hpce_recommended_objective(hpce_scenario_kind scenario,
                                                hpce_objective* out);
HPCE_API const char* hpce_scenario_kind_name(hpce_scenario_kind scenario);
HPCE_API const char* hpce_objective_name(hpce_objective objective);

HPCE_API hpce_status hpce_profile_constant(double g_per_kwh,
                                           hpce_profile** out);
HPCE_API hpce_status hpce_profile_series(const hpce_time* times,
                                         const double* g_per_kwh, size_t n,
                                         hpce_profile** out);
HPCE_API hpce_status hpce_profile_load_csv(const char* path,
                                           hpce_profile** out);
/* Constant profiles report HPCE_E_NOT_FOUND. */
HPCE_API hpce_status hpce_profile_first_time(const hpce_profile* p,
                                             hpce_time* out);
HPCE_API void hpce_profile_free(hpce_profile* p);

HPCE_API hpce_status hpce_embodied_load(const char* path, hpce_embodied* out);
HPCE_API hpce_status hpce_scope2_emissions(const hpce_interval_energy* intervals,
                                           size_t n, const hpce_profile* p,
                                           double* out_kg);
HPCE_API hpce_status hpce_amortized_scope3(const hpce_embodied* embodied,
                                           double duration_hours,
                                           double* out_kg);
/* `embodied` may be NULL: scope3 is then reported as 0 and the call returns
 * HPCE_OK with *scope3_unset = 1. */
HPCE_API hpce_status hpce_lifetime_emissions(double mean_power_kw,
                                             double duration_hours,
                                             hpce_time start,
                                             const hpce_profile* p,
                                             const hpce_embodied* embodied,
                                             hpce_emissions* out,
                                             int* scope3_unset);
HPCE_API hpce_status hpce_output_efficiency(double output_units,
                                            double energy_kwh, double nodeh,
                                            const hpce_emissions* breakdown,
                                            hpce_efficiency* out);

/* ---- frequency policy -------------------------------------------------- */

typedef enum hpce_frequency {
  HPCE_FREQ_1500 = 0,
  HPCE_FREQ_2000 = 1,
  HPCE_FREQ_2250_TURBO = 2
} hpce_frequency;

typedef enum hpce_intervention {
  HPCE_BIOS_DETERMINISM = 0,
  HPCE_FREQ_CAP_2000 = 1
} hpce_intervention;

typedef struct hpce_benchmark {
  const char* app_name;
  long nodes;
  hpce_intervention intervention;
  double perf_ratio;
  double energy_ratio;
} hpce_benchmark;

typedef struct hpce_ratios {
  double perf_loss;
  double energy_saving;
  double power_ratio;
} hpce_ratios;

typedef struct hpce_decision {
  const char* app_name;
  hpce_frequency default_setting;
  int reverted;
  double perf_loss;
  double energy_saving;
} hpce_decision;

HPCE_API const char* hpce_frequency_name(hpce_frequency f);
HPCE_API const char* hpce_intervention_name(hpce_intervention i);

HPCE_API hpce_status hpce_benchmarks_load(const char* path,
                                          hpce_benchmarks** out);
HPCE_API hpce_status hpce_benchmarks_from_csv(const char* text,
                                              hpce_benchmarks** out);
HPCE_API hpce_status hpce_benchmarks_count(const hpce_benchmarks* t,
                                           size_t* out);
HPCE_API hpce_status hpce_benchmarks_get(const hpce_benchmarks* t, size_t index,
                                         hpce_benchmark* out);
HPCE_API void hpce_benchmarks_free(hpce_benchmarks* t);

HPCE_API hpce_status hpce_derived_ratios(const hpce_benchmark* b,
                                         hpce_ratios* out);
/* out->app_name borrows b->app_name. */
HPCE_API hpce_status hpce_recommend(const hpce_benchmark* b, double threshold,
                                    hpce_decision* out);
/* apps/weights may both be NULL (n = 0) for equal weights over every
 * freq_cap_2000 benchmark. */
HPCE_API hpce_status hpce_fleet_ratios(const hpce_benchmarks* t,
                                       const char* const* apps,
                                       const double* weights, size_t n,
                                       double threshold, hpce_fleet** out);
HPCE_API hpce_status hpce_fleet_power_ratio(const hpce_fleet* f, double* out);
HPCE_API hpce_status hpce_fleet_throughput_ratio(const hpce_fleet* f,
                                                 double* out);
HPCE_API hpce_status hpce_fleet_decision_count(const hpce_fleet* f,
                                               size_t* out);
HPCE_API hpce_status hpce_fleet_decision(const hpce_fleet* f, size_t index,
                                         hpce_decision* out);
HPCE_API void hpce_fleet_free(hpce_fleet* f);

/* ---- telemetry --------------------------------------------------------- */

typedef struct hpce_segment {
  double duration_hours;
  size_t n_samples;
  double mean_kw;
  double noise_sd_kw;
} hpce_segment;

typedef struct hpce_window {
  hpce_time start;
  hpce_time end;
  size_t count;
  double mean_kw;
  double stddev_kw;
} hpce_window;

typedef struct hpce_intervention_report {
  hpce_time change_time;
  hpce_window before;
  hpce_window after;
  double delta_kw;
  double pct_change; /* fraction */
} hpce_intervention_report;

typedef struct hpce_changepoint {
  size_t index;
  hpce_time change_time;
  double score;
} hpce_changepoint;

HPCE_API hpce_status hpce_series_load(const char* path, hpce_series** out);
HPCE_API hpce_status hpce_series_from_csv(const char* text, hpce_series** out);
HPCE_API hpce_status hpce_series_create(const hpce_time* times,
                                        const double* power_kw, size_t n,
                                        hpce_series** out);
HPCE_API hpce_status hpce_series_to_csv(const hpce_series* s, char** out);
HPCE_API hpce_status hpce_series_save(const hpce_series* s, const char* path);
HPCE_API hpce_status hpce_series_size(const hpce_series* s, size_t* out);
HPCE_API hpce_status hpce_series_sample(const hpce_series* s, size_t index,
                                        hpce_time* time, double* power_kw);
HPCE_API void hpce_series_free(hpce_series* s);

HPCE_API hpce_status hpce_synth_series(const hpce_segment* segments, size_t n,
                                       uint64_t seed, hpce_time start,
                                       hpce_series** out);
/* Recipe JSON: {"seed", "start", "segments": [{"duration_hours",
 * "n_samples", "mean_kw", "noise_sd_kw"}]} */
HPCE_API hpce_status hpce_synth_from_recipe(const char* recipe_path,
                                            hpce_series** out);

HPCE_API hpce_status hpce_window_mean(const hpce_series* s, hpce_time start,
                                      hpce_time end, hpce_window* out);
HPCE_API hpce_status hpce_intervention_impact(const hpce_series* s,
                                              hpce_time change_time,
                                              int64_t guard_gap_seconds,
                                              hpce_intervention_report* out);
HPCE_API hpce_status hpce_detect_changepoint(const hpce_series* s,
                                             hpce_changepoint* out);

/* ---- simulator --------------------------------------------------------- */

typedef struct hpce_delta {
  double power_kw;
  double pct_power; /* fraction of a's mean power */
  double energy_kwh;
  double emissions_kg;
  double throughput;
} hpce_delta;

HPCE_API hpce_status hpce_scenario_load(const char* path, hpce_scenario** out);
/* Relative paths inside `json` resolve against base_dir (may be NULL). */
HPCE_API hpce_status hpce_scenario_from_json(const char* json,
                                             const char* base_dir,
                                             hpce_scenario** out);
HPCE_API hpce_status hpce_scenario_clone(const hpce_scenario* c,
                                         hpce_scenario** out);
HPCE_API hpce_status hpce_scenario_set_threshold(hpce_scenario* c,
                                                 double threshold);
/* Removes the frequency policy. */
HPCE_API hpce_status hpce_scenario_clear_rule(hpce_scenario* c);
HPCE_API hpce_status hpce_scenario_set_bios_factor(hpce_scenario* c,
                                                   double factor);
HPCE_API hpce_status hpce_scenario_set_utilization(hpce_scenario* c,
                                                   double utilization);
HPCE_API void hpce_scenario_free(hpce_scenario* c);

HPCE_API hpce_status hpce_run_scenario(const hpce_scenario* c,
                                       hpce_result** out);
/* Writes n results into out[] in ascending threshold order; thresholds are
 * copied into sorted_thresholds when it is non-NULL. */
HPCE_API hpce_status hpce_sweep_threshold(const hpce_scenario* c,
                                          const double* thresholds, size_t n,
                                          double* sorted_thresholds,
                                          hpce_result** out);
HPCE_API hpce_status hpce_compare_results(const hpce_result* a,
                                          const hpce_result* b,
                                          hpce_delta* out);

HPCE_API hpce_status hpce_result_duration_hours(const hpce_result* r,
                                                double* out);
HPCE_API hpce_status hpce_result_mean_power_kw(const hpce_result* r,
                                               double* out);
HPCE_API hpce_status hpce_result_energy_kwh(const hpce_result* r, double* out);
HPCE_API hpce_status hpce_result_emissions(const hpce_result* r,
                                           hpce_emissions* out);
HPCE_API hpce_status hpce_result_fleet_power_ratio(const hpce_result* r,
                                                   double* out);
HPCE_API hpce_status hpce_result_throughput_index(const hpce_result* r,
                                                  double* out);
/* Returns a copy owned by the caller. */
HPCE_API hpce_status hpce_result_breakdown(const hpce_result* r,
                                           hpce_breakdown** out);
HPCE_API hpce_status hpce_result_decision_count(const hpce_result* r,
                                                size_t* out);
HPCE_API hpce_status hpce_result_decision(const hpce_result* r, size_t index,
                                          hpce_decision* out);
HPCE_API hpce_status hpce_result_warning_count(const hpce_result* r,
                                               size_t* out);
HPCE_API hpce_status hpce_result_warning(const hpce_result* r, size_t index,
                                         const char** out);
HPCE_API hpce_status hpce_result_to_json(const hpce_result* r, char** out);
HPCE_API hpce_status hpce_result_from_json(const char* json, hpce_result** out);
/* *out = 1 when the two results are field-for-field identical. */
HPCE_API hpce_status hpce_result_equal(const hpce_result* a,
                                       const hpce_result* b, int* out);
HPCE_API void hpce_result_free(hpce_result* r);

#ifdef __cplusplus
}
#endif

#endif /* HPCENERGY_HPCENERGY_H_ */
