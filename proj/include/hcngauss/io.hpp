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

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hcngauss/model.hpp"

namespace hcn {

/// Canonical JSON form of a scenario (see README for the schema).
nlohmann::json scenario_to_json(const Scenario& s);

/// Parses the canonical schema. Throws Error{Parse} naming the offending
/// field; does not validate model assumptions.
Scenario scenario_from_json(const nlohmann::json& j);

/// Compact canonical serialization: sorted keys, shortest round-trip numbers.
std::string canonical_scenario(const Scenario& s);

/// First 16 hex digits of SHA-256 over the canonical scenario and the seed.
std::string scenario_fingerprint(const Scenario& s, std::uint64_t seed);

/// Three-tier deployment: lambda = (0.1, 1, 5) kappa, P = (4, 1, 0.25),
/// G = 1/(1 + t^alpha), unit-mean Rayleigh fading, homogeneous planes.
Scenario figure1_preset(double kappa, double alpha);

/// One homogeneous tier with unit-mean Rayleigh fading and G = 1/(1 + t^alpha).
Scenario single_preset(double lambda, double power, double alpha);

/// Resolves "figure1", "figure1(kappa, alpha)", "single",
/// "single(lambda, P, alpha)" or a path to a scenario JSON file, then
/// validates. Parse problems raise Error{Parse}; failed assumptions raise
/// Error{Validation} with the validation report as message.
Scenario load_scenario(std::string_view path_or_preset);

/// 17 significant digits, as used in every CSV.
std::string format_number(double v);

}  // namespace hcn
