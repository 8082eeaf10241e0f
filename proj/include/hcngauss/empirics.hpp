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
#include <span>
#include <vector>

#include "hcngauss/analytics.hpp"
#include "hcngauss/model.hpp"
#include "hcngauss/simulate.hpp"

namespace hcn {

/// Fraction of `sorted` that is <= x. Throws Error{Domain} when empty.
double empirical_cdf(std::span<const double> sorted, double x);

/// sup_x |F_n(x) - Psi(x)|, exact over the sample jumps.
double ks_distance_to_normal(std::span<const double> samples);

/// Two-sample statistic sup_x |F_a(x) - F_b(x)|.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Asymptotic two-sample critical value at significance `level`.
double ks_two_sample_critical(std::size_t n, std::size_t m, double level);

/// Dvoretzky-Kiefer-Wolfowitz half-width sqrt(ln(2 / level) / (2 n)).
double dkw_slack(double level, std::size_t n);

struct EmpiricalReport {
  std::vector<double> sorted;
  double ks_distance = 0.0;
  double xi = 0.0;
  double bound_uniform = 0.0;  // xi * 0.4785
  double slack_level = 0.01;
  double slack = 0.0;
  std::size_t envelope_violations = 0;
  /// Largest |F_n - Psi| - xi c(x) over the sample points (negative when the
  /// empirical CDF stays strictly inside the envelope).
  double worst_excess = 0.0;
};

/// Checks the empirical CDF of standardized samples against
/// Psi(x) +- (xi c(x) + DKW slack) at every sample point.
EmpiricalReport envelope_report(std::span<const double> standardized, const GaussianBound& bound,
                                double slack_level = 0.01);

EmpiricalReport envelope_report(std::span<const double> standardized, const Scenario& s,
                                double slack_level = 0.01);

struct ConvergenceRow {
  double radius = 0.0;
  double sample_mean = 0.0;
  double sample_variance = 0.0;
  double mean_standard_error = 0.0;
  double truncated_mean = 0.0;      // analytic mean over the disc
  double truncated_variance = 0.0;  // analytic variance over the disc
  double mean_gap = 0.0;            // |sample mean - whole-plane mean|
  double variance_gap = 0.0;        // |sample variance - whole-plane variance|
};

/// Simulates at each radius (cfg.radius is ignored) and compares the sample
/// moments with the whole-plane Campbell moments. Radii must be ascending.
std::vector<ConvergenceRow> convergence_diagnostic(const Scenario& s, std::span<const double> radii,
                                                   const SimConfig& cfg);

}  // namespace hcn
