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
#include <vector>

#include "hpcenergy/emissions.hpp"
#include "hpcenergy/error.hpp"

using namespace hpcenergy;
using namespace hpcenergy::emissions;

namespace {

// Brute-force oracle: integrate a step-hold series second by second.
double integrate_by_second(const std::vector<std::pair<Timestamp, double>>& pts,
                           Timestamp start, Timestamp end) {
  double sum = 0.0;
  for (Timestamp t = start; t < end; ++t) {
    double v = pts.front().second;
    for (const auto& p : pts) {
      if (p.first <= t) v = p.second;
    }
    sum += v;
  }
  return sum / static_cast<double>(end - start);
}

}  // namespace

TEST_SUITE("emissions") {

TEST_CASE("classify_scenario bands") {
  CHECK(classify_scenario(0) == Scenario::Scope3Dominated);
  CHECK(classify_scenario(25) == Scenario::Scope3Dominated);
  CHECK(classify_scenario(29.99) == Scenario::Scope3Dominated);
  CHECK(classify_scenario(30) == Scenario::Balanced);
  CHECK(classify_scenario(65) == Scenario::Balanced);
  CHECK(classify_scenario(100) == Scenario::Balanced);
  CHECK(classify_scenario(100.01) == Scenario::Scope2Dominated);
  CHECK(classify_scenario(150) == Scenario::Scope2Dominated);
  CHECK_THROWS_AS(classify_scenario(-1), Error);
  CHECK_THROWS_AS(classify_scenario(std::nan("")), Error);
}

TEST_CASE("recommended_objective mapping") {
  CHECK(recommended_objective(Scenario::Scope3Dominated) ==
        Objective::MaximizeApplicationPerformance);
  CHECK(recommended_objective(Scenario::Balanced) ==
        Objective::BalancePerformanceAndEnergy);
  CHECK(recommended_objective(Scenario::Scope2Dominated) ==
        Objective::MaximizeEnergyEfficiency);
}

TEST_CASE("scope2_emissions") {
  const std::vector<IntervalEnergy> day{{0, 86400, 2530.0 * 24}};
  CHECK(scope2_emissions(day, CarbonIntensityProfile::constant(0)) == 0.0);
  CHECK(scope2_emissions(day, CarbonIntensityProfile::constant(50)) ==
        doctest::Approx(3036.0));

  const auto series = CarbonIntensityProfile::series({{0, 10}, {3600, 30}});
  const std::vector<IntervalEnergy> two{{0, 3600, 100}, {3600, 7200, 100}};
  CHECK(scope2_emissions(two, series) == doctest::Approx(4.0));
}

TEST_CASE("step-hold mean matches a per-second integration") {
  const std::vector<std::pair<Timestamp, double>> pts{
      {100, 40}, {1900, 55}, {2500, 120}, {4000, 0}};
  const auto profile = CarbonIntensityProfile::series(pts);
  for (auto [s, e] : std::vector<std::pair<Timestamp, Timestamp>>{
           {100, 200}, {150, 2600}, {1900, 2500}, {2000, 6000}, {4100, 4200}, {100, 9000}}) {
    CHECK(profile.mean_intensity(s, e) ==
          doctest::Approx(integrate_by_second(pts, s, e)).epsilon(1e-12));
  }
}

TEST_CASE("series coverage and validation") {
  const auto profile = CarbonIntensityProfile::series({{1000, 20}});
  const IntervalEnergy early{500, 1500, 10};
  try {
    scope2_emissions(std::span(&early, 1), profile);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Coverage);
  }
  CHECK_THROWS_AS(CarbonIntensityProfile::series({}), Error);
  CHECK_THROWS_AS(CarbonIntensityProfile::series({{0, 1}, {0, 2}}), Error);
  CHECK_THROWS_AS(CarbonIntensityProfile::series({{0, -1}}), Error);
  CHECK_THROWS_AS(CarbonIntensityProfile::constant(-5), Error);
}

TEST_CASE("single-entry series equals constant on covered intervals") {
  const auto series = CarbonIntensityProfile::series({{0, 73}});
  const auto constant = CarbonIntensityProfile::constant(73);
  const std::vector<IntervalEnergy> ivs{{0, 10, 5}, {10, 100000, 700}};
  CHECK(scope2_emissions(ivs, series) == doctest::Approx(scope2_emissions(ivs, constant)));
}

TEST_CASE("amortized_scope3") {
  const EmbodiedEmissions e{1'000'000, 50'000};
  CHECK(amortized_scope3(e, 0) == 0.0);
  CHECK(amortized_scope3(e, 50'000) == doctest::Approx(1'000'000));
  CHECK(amortized_scope3(e, 5'000) == doctest::Approx(100'000));
  CHECK_THROWS_AS(amortized_scope3({1000, 0}, 10), Error);
  CHECK_THROWS_AS(amortized_scope3(e, -1), Error);
}

TEST_CASE("lifetime_emissions") {
  const auto c100 = CarbonIntensityProfile::constant(100);
  const auto r = lifetime_emissions(3220, 1, 0, c100, EmbodiedEmissions{0, 1000});
  CHECK(r.scope2_kg == doctest::Approx(322.0));
  CHECK(r.scope3_kg == 0.0);

  const auto z = lifetime_emissions(0, 10, 0, c100, EmbodiedEmissions{1000, 100});
  CHECK(z.scope2_kg == 0.0);
  CHECK(z.scope3_kg == doctest::Approx(100.0));
  CHECK(z.total_kg == z.scope2_kg + z.scope3_kg);

  // Unset embodied figures fail loudly.
  CHECK_THROWS_AS(lifetime_emissions(100, 1, 0, c100, std::nullopt), Error);
  const auto op = operational_emissions(100, 1, 0, c100);
  CHECK(op.scope3_kg == 0.0);
  CHECK(op.total_kg == doctest::Approx(10.0));
}

TEST_CASE("output_efficiency") {
  const EmissionsBreakdown b{5, 0, 5};
  const auto m = output_efficiency(100, 50, 10, b);
  CHECK(m.per_nodeh == doctest::Approx(10));
  CHECK(m.per_kwh == doctest::Approx(2));
  CHECK(m.per_kgco2 == doctest::Approx(20));
  const auto zero = output_efficiency(0, 50, 10, b);
  CHECK(zero.per_nodeh == 0.0);
  CHECK(zero.per_kwh == 0.0);
  CHECK(zero.per_kgco2 == 0.0);
  const auto twice = output_efficiency(200, 50, 10, b);
  CHECK(twice.per_kwh == doctest::Approx(2 * m.per_kwh));
  CHECK_THROWS_AS(output_efficiency(1, 0, 10, b), Error);
  CHECK_THROWS_AS(output_efficiency(1, 1, 0, b), Error);
  CHECK_THROWS_AS(output_efficiency(1, 1, 1, EmissionsBreakdown{}), Error);
}

}  // TEST_SUITE
