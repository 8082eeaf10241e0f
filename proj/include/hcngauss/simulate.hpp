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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcngauss/model.hpp"

namespace hcn {

enum class Construction {
  /// Poisson number of points in the disc of the given radius.
  PoissonField,
  /// Exactly ceil(Lambda_n) i.i.d. points per tier with the same radial law.
  FixedCountIID,
};

struct SimConfig {
  double radius = 200.0;
  std::size_t replications = 10000;
  std::uint64_t seed = 1;
  Construction construction = Construction::PoissonField;
  /// Worker count; 0 picks hardware concurrency. Never affects results.
  unsigned threads = 0;
};

/// Throws Error{Domain} unless radius > 0 and replications >= 1.
void check_config(const SimConfig& cfg);

struct SampleSet {
  std::vector<double> values;  // raw interference, one per replication
  std::string fingerprint;     // scenario + seed, see scenario_fingerprint()
  SimConfig config;
};

/// Seed of the substream owned by (replication, tier).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t replication, std::uint64_t tier);

/// Distances of one tier's base stations inside [0, radius]. PoissonField
/// returns them in increasing order; FixedCountIID in draw order.
std::vector<double> sample_distances(const TierConfig& tier, double radius, Construction construction,
                                     RandomStream& rng);

/// P * sum_i H_i G(t_i) over the given distances, drawing one fading gain
/// per distance.
double tier_interference(const TierConfig& tier, std::span<const double> distances, RandomStream& rng);

/// One interference draw with every tier fed from `rng`.
double interference_realization(const Scenario& s, const SimConfig& cfg, RandomStream& rng);

/// Replication `replication` of monte_carlo(): every tier uses its own
/// substream, so the value depends only on (scenario, cfg, replication).
double interference_replication(const Scenario& s, const SimConfig& cfg, std::uint64_t replication);

/// `cfg.replications` independent draws, identical for any worker count.
SampleSet monte_carlo(const Scenario& s, const SimConfig& cfg);

enum class Standardization {
  Analytic,  // whole-plane mean and variance
  Windowed,  // mean and variance of the disc the samples were drawn on
  Empirical, // sample mean and sample standard deviation
};

/// (I - mean) / sqrt(variance), preserving order. Throws Error{Degenerate} on
/// zero variance and Error{Domain} on an empty sample set.
std::vector<double> standardize(const SampleSet& samples, const Scenario& s, Standardization mode);

struct SampleStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
};

SampleStats sample_stats(std::span<const double> values);

}  // namespace hcn
