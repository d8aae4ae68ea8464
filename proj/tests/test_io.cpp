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

#include <doctest.h>

#include <filesystem>

#include "hpcenergy/error.hpp"
#include "hpcenergy/io.hpp"
#include "hpcenergy/simulator.hpp"

using namespace hpcenergy;

namespace {

const std::string kData = HPCENERGY_DATA_DIR;

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an hpcenergy::Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("model round trip") {
  const auto m = io::load_model(kData + "/archer2_model.json");
  CHECK(m == power::reference_model_archer2());
  CHECK(io::model_from_json(io::model_to_json(m)) == m);
}

TEST_CASE("model errors") {
  CHECK(kind_of([] { io::model_from_json("{"); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          io::model_from_json(
              R"({"name":"x","compute_component":"c","components":[],"extra":1})");
        }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          io::model_from_json(
              R"({"name":"x","compute_component":"c","components":[{"name":"c","count":1,)"
              R"("idle_kw_per_unit":2,"loaded_kw_per_unit":1,"load_response":"linear"}]})");
        }) == ErrorKind::Validation);
  CHECK(kind_of([] { io::load_model("/nonexistent.json"); }) == ErrorKind::Io);
}

TEST_CASE("breakdown round trip") {
  const auto b = power::system_power(power::reference_model_archer2(), 0.37);
  const auto back = io::breakdown_from_json(io::breakdown_to_json(b));
  CHECK(back.total_kw == b.total_kw);
  CHECK(back.per_component == b.per_component);
}

TEST_CASE("scenario documents") {
  const auto cfg = io::load_scenario(kData + "/scenarios/stacked.json");
  CHECK(cfg.utilization == 0.92);
  CHECK(cfg.bios_factor == 0.935);
  REQUIRE(cfg.rule.has_value());
  CHECK(cfg.rule->perf_loss_threshold == 0.10);
  CHECK(cfg.mix.entries.size() == 7);
  CHECK(cfg.benchmarks.size() == 7);
  CHECK(cfg.start == parse_timestamp("2022-11-01T00:00:00Z"));

  const std::string base = 
      R"({"model":null,"benchmarks":"table4_freq.csv","mix":"equal",)"
      R"("utilization":0.5,"duration_hours":1)";
  SUBCASE("defaults") {
    const auto c = io::scenario_from_json(base + "}", kData);
    CHECK(c.model == power::reference_model_archer2());
    REQUIRE(c.rule.has_value());
    CHECK(c.rule->perf_loss_threshold == policy::kDefaultPerfLossThreshold);
  }
  SUBCASE("explicit null rule disables the policy") {
    const auto c = io::scenario_from_json(base + R"(,"rule":null})", kData);
    CHECK_FALSE(c.rule.has_value());
  }
  SUBCASE("unknown fields are rejected") {
    CHECK(kind_of([&] { io::scenario_from_json(base + R"(,"utilisation":1})", kData); }) ==
          ErrorKind::Parse);
    CHECK(kind_of([&] {
            io::scenario_from_json(base + R"(,"carbon":{"constant_g_per_kwh":1,"x":2}})",
                                   kData);
          }) == ErrorKind::Parse);
  }
  SUBCASE("carbon needs exactly one source") {
    CHECK(kind_of([&] { io::scenario_from_json(base + R"(,"carbon":{}})", kData); }) ==
          ErrorKind::Parse);
  }
  SUBCASE("wrong types") {
    CHECK(kind_of([&] {
            io::scenario_from_json(R"({"model":null,"rule":null,"utilization":"high","duration_hours":1})",
                                   kData);
          }) == ErrorKind::Parse);
  }
}

TEST_CASE("result round trip") {
  for (const char* name : {"baseline", "bios_only", "stacked", "stacked_grid"}) {
    const auto r = sim::run_scenario(io::load_scenario(kData + "/scenarios/" + name + ".json"));
    const auto json = io::result_to_json(r);
    CHECK(io::result_from_json(json) == r);
    CHECK(io::result_to_json(io::result_from_json(json)) == json);
  }
}

TEST_CASE("intensity csv and embodied") {
  const auto p = io::load_intensity_csv(kData + "/carbon_intensity_example.csv");
  CHECK_FALSE(p.is_constant());
  CHECK(p.points().size() == 12);
  const auto e = io::embodied_from_json(io::read_file(kData + "/embodied_example.json"));
  CHECK(e.total_kgco2e == 10000000.0);
  CHECK(e.service_lifetime_hours == 52560.0);
}

TEST_CASE("synth recipe") {
  const auto r = io::recipe_from_json(io::read_file(kData + "/fixtures/archer2_like.json"));
  CHECK(r.seed == 5860);
  CHECK(r.segments.size() == 5);
  CHECK(kind_of([] { io::recipe_from_json(R"({"seed":1,"start":"2022-01-01","segments":[],"x":0})"); }) ==
        ErrorKind::Parse);
}

}  // TEST_SUITE
