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

#ifndef HPCENERGY_ERROR_HPP_
#define HPCENERGY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hpcenergy {

/// Category of a failure. The C API maps each kind onto a status code and the
/// CLI maps those onto exit codes (domain/validation -> 1, parse/io -> 2).
enum class ErrorKind {
  Domain,      // argument outside the operation's mathematical domain
  Validation,  // a record or model violates its invariants
  Coverage,    // an interval is not covered by a carbon-intensity series
  NotFound,    // named component / app does not exist
  Parse,       // malformed input document
  Io,          // file could not be read or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hpcenergy

#endif  // HPCENERGY_ERROR_HPP_
