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

#ifndef HPCENERGY_TIMESTAMP_HPP_
#define HPCENERGY_TIMESTAMP_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace hpcenergy {

/// Seconds since 1970-01-01T00:00:00Z.
using Timestamp = std::int64_t;

/// Parses "YYYY-MM-DDTHH:MM:SSZ" (a trailing "Z" or "+00:00" is accepted, a
/// date-only form "YYYY-MM-DD" means midnight). Throws Parse on anything else.
Timestamp parse_timestamp(std::string_view text);

/// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_timestamp(Timestamp t);

}  // namespace hpcenergy

#endif  // HPCENERGY_TIMESTAMP_HPP_
