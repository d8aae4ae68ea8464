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

#include "hpcenergy/timestamp.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "hpcenergy/error.hpp"

namespace hpcenergy {

namespace {

int read_int(std::string_view text, std::size_t pos, std::size_t len,
             std::string_view whole) {
  int value = 0;
  if (pos + len > text.size()) {
    fail(ErrorKind::Parse, "bad timestamp '" + std::string(whole) + "'");
  }
  auto first = text.data() + pos;
  auto [ptr, ec] = std::from_chars(first, first + len, value);
  if (ec != std::errc() || ptr != first + len) {
    fail(ErrorKind::Parse, "bad timestamp '" + std::string(whole) + "'");
  }
  return value;
}

void expect(std::string_view text, std::size_t pos, char c,
            std::string_view whole) {
  if (pos >= text.size() || text[pos] != c) {
    fail(ErrorKind::Parse, "bad timestamp '" + std::string(whole) + "'");
  }
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  const auto whole = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r')) {
    text.remove_suffix(1);
  }

  const int y = read_int(text, 0, 4, whole);
  expect(text, 4, '-', whole);
  const int mo = read_int(text, 5, 2, whole);
  expect(text, 7, '-', whole);
  const int d = read_int(text, 8, 2, whole);
  int h = 0, mi = 0, s = 0;
  if (text.size() > 10) {
    expect(text, 10, 'T', whole);
    h = read_int(text, 11, 2, whole);
    expect(text, 13, ':', whole);
    mi = read_int(text, 14, 2, whole);
    expect(text, 16, ':', whole);
    s = read_int(text, 17, 2, whole);
    const auto zone = text.substr(19);
    if (zone != "Z" && zone != "+00:00") {
      fail(ErrorKind::Parse,
           "timestamp '" + std::string(whole) + "' is not UTC");
    }
  }
  const year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)},
                           day{static_cast<unsigned>(d)}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) {
    fail(ErrorKind::Parse, "bad timestamp '" + std::string(whole) + "'");
  }
  const auto days = sys_days{ymd}.time_since_epoch().count();
  return static_cast<Timestamp>(days) * 86400 + h * 3600 + mi * 60 + s;
}

std::string format_timestamp(Timestamp t) {
  using namespace std::chrono;
  const auto days = sys_days{std::chrono::days{
      t >= 0 ? t / 86400 : -((-t + 86399) / 86400)}};
  const auto secs = t - days.time_since_epoch().count() * 86400;
  const year_month_day ymd{days};
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long long>(secs / 3600),
                static_cast<long long>((secs / 60) % 60),
                static_cast<long long>(secs % 60));
  return buf;
}

}  // namespace hpcenergy
