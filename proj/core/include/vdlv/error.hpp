// Copyright 2026 The VDLV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VDLV_ERROR_HPP_
#define VDLV_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vdlv {

// Coarse error classes. The CLI maps each one to a distinct exit code, so the
// order here is part of the command-line contract.
enum class ErrorCategory {
  kInvalidParameter,
  kUnsupportedClass,
  kIo,
  kDigestMismatch,
  kSchemaMismatch,
  kMalformedRecord,
  kValidation,
};

std::string_view to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message);

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] void fail(ErrorCategory category, const std::string& message);

}  // namespace vdlv

#endif  // VDLV_ERROR_HPP_
