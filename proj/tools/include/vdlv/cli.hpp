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

#ifndef VDLV_CLI_HPP_
#define VDLV_CLI_HPP_

// vdlv command-line front end.
//
//   vdlv synth <vd> <kind> (--nominal | --seed N) [--cp X] [--theta X] [grid] [--out FILE]
//   vdlv dataset --out DIR --seed N [--count N] [--classes default|vd:kind,...] [--workers N]
//   vdlv eval <real> <generated> [--pairing nearest|index] [--window none|hann]
//             [--report FILE] [--raw] [--no-per-class]
//   vdlv plot <records> --out DIR [--format csv|svg|both]
//   vdlv validate <path> [--sample N | --all] [--tolerance X]
//   vdlv presets [--out FILE]
//
// Grid flags: --t0, --dt, --n. synth, dataset, validate and presets take
// --presets FILE to replace the builtin table.
// Failures print "error: <category>: <message>" on stderr and exit with the
// code below.

#include <ostream>
#include <string>
#include <vector>

#include "vdlv/error.hpp"

namespace vdlv::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitInvalidParameter = 3,
  kExitUnsupportedClass = 4,
  kExitIo = 5,
  kExitDigestMismatch = 6,
  kExitSchemaMismatch = 7,
  kExitMalformedRecord = 8,
  kExitValidation = 9,
};

int exit_code(ErrorCategory category);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vdlv::cli

#endif  // VDLV_CLI_HPP_
