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

#ifndef HPCENERGY_SRC_CSV_HPP_
#define HPCENERGY_SRC_CSV_HPP_

#include <charconv>
#include <cmath>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hpcenergy/error.hpp"

namespace hpcenergy::csv {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

/// Splits one record. Fields may be double-quoted ("" escapes a quote).
inline std::vector<std::string> split(std::string_view line, std::size_t lineno) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && trim(field).empty()) {
      quoted = true;
      was_quoted = true;
      field.clear();
    } else if (c == ',') {
      out.push_back(was_quoted ? field : std::string(trim(field)));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) {
    fail(ErrorKind::Parse,
         "line " + std::to_string(lineno) + ": unterminated quoted field");
  }
  out.push_back(was_quoted ? field : std::string(trim(field)));
  return out;
}

inline double to_double(std::string_view text, std::size_t lineno,
                        std::string_view column) {
  text = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " +
                               std::string(column) + " '" + std::string(text) +
                               "' is not a number");
  }
  return v;
}

inline long to_long(std::string_view text, std::size_t lineno,
                    std::string_view column) {
  text = trim(text);
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " +
                               std::string(column) + " '" + std::string(text) +
                               "' is not an integer");
  }
  return v;
}

/// Reads rows after checking the header. Blank lines are skipped. Each row is
/// handed to `on_row(fields, lineno)` with exactly header.size() fields.
template <typename OnRow>
void read(std::istream& in, const std::vector<std::string_view>& header,
          OnRow&& on_row) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (lineno == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
    if (trim(view).empty()) continue;
    auto fields = split(view, lineno);
    if (!have_header) {
      bool match = fields.size() == header.size();
      for (std::size_t i = 0; match && i < header.size(); ++i) {
        match = fields[i] == header[i];
      }
      if (!match) {
        std::string expected;
        for (auto h : header) expected += (expected.empty() ? "" : ",") + std::string(h);
        fail(ErrorKind::Parse, "line " + std::to_string(lineno) +
                                   ": expected header '" + expected + "'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected " +
                                 std::to_string(header.size()) +
                                 " fields, found " +
                                 std::to_string(fields.size()));
    }
    on_row(fields, lineno);
  }
  if (!have_header) fail(ErrorKind::Parse, "missing CSV header");
}

}  // namespace hpcenergy::csv

#endif  // HPCENERGY_SRC_CSV_HPP_
