// Copyright 2026 The pedit Authors.
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

#ifndef PEDIT_ERROR_HPP
#define PEDIT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pedit {

enum class ErrorCode {
  kInvalidArgument,
  kGuardRefusal,  // a quadratic oracle was asked to run above its size guard
  kIo,
  kMismatch,      // e.g. a profile applied to the wrong source string
  kOutOfRange,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by apply_script and script_from_alignment; carries the index of the
// offending operation (or alignment pair).
class ScriptError : public Error {
 public:
  ScriptError(std::size_t index, const std::string& what)
      : Error(ErrorCode::kOutOfRange, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace pedit

#endif  // PEDIT_ERROR_HPP
