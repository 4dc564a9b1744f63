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

#include "vdlv/error.hpp"

namespace vdlv {

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidParameter: return "invalid-parameter";
    case ErrorCategory::kUnsupportedClass: return "unsupported-class";
    case ErrorCategory::kIo: return "io";
    case ErrorCategory::kDigestMismatch: return "digest-mismatch";
    case ErrorCategory::kSchemaMismatch: return "schema-mismatch";
    case ErrorCategory::kMalformedRecord: return "malformed-record";
    case ErrorCategory::kValidation: return "validation";
  }
  return "unknown";
}

Error::Error(ErrorCategory category, const std::string& message)
    : std::runtime_error(message), category_(category) {}

void fail(ErrorCategory category, const std::string& message) {
  throw Error(category, message);
}

}  // namespace vdlv
