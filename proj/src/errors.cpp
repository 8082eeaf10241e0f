// Copyright 2026 The hcngauss Authors
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

#include "hcngauss/errors.hpp"

namespace hcn {

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Domain: return "domain";
    case ErrorCategory::Parameter: return "parameter";
    case ErrorCategory::Divergence: return "divergence";
    case ErrorCategory::Degenerate: return "degenerate";
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Validation: return "validation";
    case ErrorCategory::Io: return "io";
  }
  return "unknown";
}

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Domain: return 3;
    case ErrorCategory::Parameter: return 4;
    case ErrorCategory::Divergence: return 5;
    case ErrorCategory::Degenerate: return 6;
    case ErrorCategory::Parse: return 7;
    case ErrorCategory::Validation: return 8;
    case ErrorCategory::Io: return 9;
  }
  return 1;
}

}  // namespace hcn
