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

#include <cmath>

#include "hpcenergy/error.hpp"
#include "hpcenergy/power_model.hpp"

using namespace hpcenergy;
using namespace hpcenergy::power;

namespace {

ComponentSpec compute_nodes() {
  return {"compute_nodes", 5860, 0.23, 0.51, LoadResponse::Linear};
}

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

TEST_SUITE("power_model") {

TEST_CASE("component_power at the table endpoints") {
  CHECK(component_power(compute_nodes(), 1.0) == doctest::Approx(2988.6).epsilon(1e-12));
  CHECK(component_power(compute_nodes(), 0.0) == doctest::Approx(1347.8).epsilon(1e-12));
  // Within 1% of the published 3,000 / 1,350 kW totals.
  CHECK(std::abs(component_power(compute_nodes(), 1.0) - 3000.0) / 3000.0 < 0.01);
  CHECK(std::abs(component_power(compute_nodes(), 0.0) - 1350.0) / 1350.0 < 0.01);
}

TEST_CASE("component_power interpolates linearly") {
  // 5860 * (0.23 + 0.5 * 0.28)
  CHECK(component_power(compute_nodes(), 0.5) == doctest::Approx(2168.2).epsilon(1e-12));
}

TEST_CASE("degenerate and constant components ignore utilization") {
  const ComponentSpec flat{"cdu", 6, 16.0, 16.0, LoadResponse::Linear};
  const ComponentSpec constant{"switch", 768, 0.25, 0.4, LoadResponse::Constant};
  for (double u : {0.0, 0.3, 0.92, 1.0}) {
    CHECK(component_power(flat, u) == doctest::Approx(96.0));
    CHECK(component_power(constant, u) == doctest::Approx(192.0));
  }
}

TEST_CASE("utilization outside [0,1] is a domain error naming the value") {
  try {
    component_power(compute_nodes(), 1.5);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
    CHECK(std::string(e.what()).find("1.5") != std::string::npos);
  }
  CHECK(kind_of([] { component_power(compute_nodes(), -0.01); }) == ErrorKind::Domain);
  CHECK(kind_of([] { component_power(compute_nodes(), std::nan("")); }) == ErrorKind::Domain);
}

TEST_CASE("component and model invariants") {
  CHECK(kind_of([] { ComponentSpec{"x", 0, 1, 1, LoadResponse::Linear}.validate(); }) ==
        ErrorKind::Validation);
  CHECK(kind_of([] { ComponentSpec{"x", 1, 2, 1, LoadResponse::Linear}.validate(); }) ==
        ErrorKind::Validation);
  CHECK(kind_of([] { ComponentSpec{"x", 1, -1, 1, LoadResponse::Linear}.validate(); }) ==
        ErrorKind::Validation);
  CHECK(kind_of([] {
          SystemModel("m", {compute_nodes(), compute_nodes()}, "compute_nodes");
        }) == ErrorKind::Validation);
  CHECK(kind_of([] { SystemModel("m", {compute_nodes()}, "gpus"); }) ==
        ErrorKind::Validation);
}

TEST_CASE("system_power") {
  const auto model = reference_model_archer2();
  const auto loaded = system_power(model, 1.0);
  const auto idle = system_power(model, 0.0);
  CHECK(loaded.total_kw >= 3430.0);
  CHECK(loaded.total_kw <= 3570.0);
  CHECK(idle.total_kw >= 1764.0);
  CHECK(idle.total_kw <= 1836.0);
  CHECK(loaded.total_kw == doctest::Approx(3523.6));
  CHECK(idle.total_kw == doctest::Approx(1800.0));

  double sum = 0.0;
  for (const auto& [name, kw] : loaded.per_component) {
    CHECK(kw >= 0.0);
    sum += kw;
  }
  CHECK(sum == loaded.total_kw);

  CHECK(system_power(SystemModel{}, 0.7).total_kw == 0.0);
}

TEST_CASE("reference model shape") {
  const auto model = reference_model_archer2();
  CHECK(model.compute_component() == "compute_nodes");
  REQUIRE(model.components().size() == 5);
  const auto* cn = model.find("compute_nodes");
  REQUIRE(cn != nullptr);
  CHECK(cn->count == 5860);
  CHECK(cn->idle_kw_per_unit / cn->loaded_kw_per_unit == doctest::Approx(0.451).epsilon(1e-3));
  const auto* sw = model.find("interconnect_switches");
  REQUIRE(sw != nullptr);
  CHECK(sw->count == 768);
  CHECK(sw->load_response == LoadResponse::Constant);

  const auto loaded = system_power(model, 1.0);
  const double share = loaded.at("compute_nodes") / loaded.total_kw;
  CHECK(share >= 0.82);
  CHECK(share <= 0.88);
}

TEST_CASE("apply_power_factor") {
  const auto model = reference_model_archer2();
  CHECK(apply_power_factor(model, "compute_nodes", 1.0, FactorMode::WholeDraw) == model);
  CHECK(apply_power_factor(model, "compute_nodes", 1.0, FactorMode::DynamicOnly) == model);

  SUBCASE("WholeDraw 0.935 at u=0.92 matches the hand breakdown") {
    // Hand oracle: compute 5860*(0.23+0.92*0.28), overheads 23*(5.4+0.92*3.6),
    // constants 192 + 96 + 40.
    const double compute = 5860 * (0.23 + 0.92 * 0.28);
    const double total = compute + 23 * (5.4 + 0.92 * 3.6) + 192 + 96 + 40;
    const double expected_reduction = compute * (1 - 0.935) / total;
    const auto before = system_power(model, 0.92).total_kw;
    const auto after =
        system_power(apply_power_factor(model, "compute_nodes", 0.935, FactorMode::WholeDraw),
                     0.92)
            .total_kw;
    CHECK(before == doctest::Approx(total).epsilon(1e-12));
    CHECK(1 - after / before == doctest::Approx(expected_reduction).epsilon(1e-9));
    CHECK(1 - after / before == doctest::Approx(0.054856).epsilon(1e-4));
  }

  SUBCASE("DynamicOnly 0 leaves the idle floor") {
    const auto scaled =
        apply_power_factor(model, "compute_nodes", 0.0, FactorMode::DynamicOnly);
    CHECK(system_power(scaled, 1.0).at("compute_nodes") == doctest::Approx(1347.8));
  }

  SUBCASE("original model unchanged") {
    const auto copy = model;
    (void)apply_power_factor(model, "compute_nodes", 0.5, FactorMode::WholeDraw);
    CHECK(model == copy);
  }

  SUBCASE("composition is order independent") {
    auto a = apply_power_factor(model, "compute_nodes", 0.9, FactorMode::WholeDraw);
    a = apply_power_factor(a, "compute_nodes", 0.7, FactorMode::DynamicOnly);
    auto b = apply_power_factor(model, "compute_nodes", 0.7, FactorMode::DynamicOnly);
    b = apply_power_factor(b, "compute_nodes", 0.9, FactorMode::WholeDraw);
    for (double u : {0.0, 0.5, 1.0}) {
      CHECK(system_power(a, u).total_kw == doctest::Approx(system_power(b, u).total_kw));
    }
  }

  SUBCASE("errors") {
    CHECK(kind_of([&] {
            apply_power_factor(model, "gpu", 0.9, FactorMode::WholeDraw);
          }) == ErrorKind::NotFound);
    CHECK(kind_of([&] {
            apply_power_factor(model, "compute_nodes", 0.0, FactorMode::WholeDraw);
          }) == ErrorKind::Domain);
    CHECK(kind_of([&] {
            apply_power_factor(model, "compute_nodes", -0.1, FactorMode::DynamicOnly);
          }) == ErrorKind::Domain);
  }
}

}  // TEST_SUITE
