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

// Seeded randomized property checks shared by the unit and acceptance suites.
#ifndef HPCENERGY_TESTS_PROPERTY_CHECKS_HPP_
#define HPCENERGY_TESTS_PROPERTY_CHECKS_HPP_

#include <cstdint>
#include <string>

namespace hpcenergy::testing {

struct PropertyOutcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

PropertyOutcome power_monotone_in_utilization(int cases, std::uint64_t seed);
PropertyOutcome scope2_linear_in_energy(int cases, std::uint64_t seed);
PropertyOutcome scope3_linear_in_duration(int cases, std::uint64_t seed);
/// Energy and throughput both non-increasing as the threshold rises.
PropertyOutcome sweep_monotone(int cases, std::uint64_t seed);
/// Models, breakdowns and scenario results survive a JSON round trip.
PropertyOutcome json_round_trip(int cases, std::uint64_t seed);

}  // namespace hpcenergy::testing

#endif  // HPCENERGY_TESTS_PROPERTY_CHECKS_HPP_
