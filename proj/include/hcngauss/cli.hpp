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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcngauss/model.hpp"
#include "hcngauss/simulate.hpp"

namespace hcn::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Subcommand { Bound, Simulate, Compare, Laplace, Scaling, Converge };

std::string_view to_string(Subcommand c);
std::optional<Subcommand> parse_subcommand(std::string_view name);

struct Grid {
  double min = -8.0;
  double max = 8.0;
  std::size_t points = 801;

  double at(std::size_t i) const;
};

/// "MIN:MAX:POINTS". Throws Error{Parse}.
Grid parse_grid(std::string_view text);

/// Comma-separated numbers. Throws Error{Parse}.
std::vector<double> parse_list(std::string_view text);

Construction parse_construction(std::string_view text);
std::string_view to_string(Construction c);

Standardization parse_standardization(std::string_view text);
std::string_view to_string(Standardization mode);

struct RunManifest {
  std::string scenario_source;  // preset string or file path
  Scenario scenario;
  Subcommand subcommand = Subcommand::Bound;
  SimConfig sim;
  std::filesystem::path out_dir = ".";
  double slack_level = 0.01;
  Grid grid;
  Standardization standardization = Standardization::Windowed;
  std::vector<double> svals{0.1, 1.0, 10.0};
  std::vector<double> factors{1.0, 4.0, 25.0, 100.0};
  std::vector<std::size_t> scaled_tiers;  // 0-based; empty scales all
  std::vector<double> radii{10.0, 50.0, 200.0};
  std::string timestamp;                  // ISO-8601 UTC, set by run() if empty
  std::vector<std::filesystem::path> outputs;  // filled by run()

  /// Fingerprint embedded in every data file of this run.
  std::string fingerprint() const;
};

/// Executes the subcommand, writing its data files and manifest.json into
/// `out_dir` and a JSON summary to `out`. Throws hcn::Error on failure.
void run(RunManifest& manifest, std::ostream& out);

}  // namespace hcn::cli
