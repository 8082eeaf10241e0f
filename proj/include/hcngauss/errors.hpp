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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcn {

enum class ErrorCategory {
  Domain,      // argument outside the operation's domain (negative t, s, n)
  Parameter,   // invalid model parameter (mean power, Nakagami m, ...)
  Divergence,  // an integral that should be finite is not
  Degenerate,  // zero variance, standardization undefined
  Parse,       // malformed scenario file or preset string
  Validation,  // scenario violates a model assumption
  Io,
};

std::string_view to_string(ErrorCategory category);

/// Process exit code used by the CLI for each category (always nonzero).
int exit_code(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace hcn
