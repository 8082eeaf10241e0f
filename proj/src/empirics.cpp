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

#include "hcngauss/empirics.hpp"

#include <algorithm>
#include <cmath>

#include "hcngauss/errors.hpp"

namespace hcn {

double empirical_cdf(std::span<const double> sorted, double x) {
  if (sorted.empty()) throw Error(ErrorCategory::Domain, "empirical CDF of an empty sample");
  const auto count = std::upper_bound(sorted.begin(), sorted.end(), x) - sorted.begin();
  return static_cast<double>(count) / static_cast<double>(sorted.size());
}

double ks_distance_to_normal(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCategory::Domain, "KS distance of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double psi = std_normal_cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - psi, psi - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCategory::Domain, "KS distance of an empty sample");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n - static_cast<double>(j) / m));
  }
  return d;
}

double ks_two_sample_critical(std::size_t n, std::size_t m, double level) {
  if (n == 0 || m == 0 || !(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCategory::Domain, "two-sample critical value needs n, m >= 1 and level in (0, 1)");
  }
  const double c = std::sqrt(-0.5 * std::log(level / 2.0));
  const double dn = static_cast<double>(n);
  const double dm = static_cast<double>(m);
  return c * std::sqrt((dn + dm) / (dn * dm));
}

double dkw_slack(double level, std::size_t n) {
  if (n == 0 || !(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCategory::Domain, "DKW slack needs n >= 1 and level in (0, 1)");
  }
  return std::sqrt(std::log(2.0 / level) / (2.0 * static_cast<double>(n)));
}

EmpiricalReport envelope_report(std::span<const double> standardized, const GaussianBound& bound,
                                double slack_level) {
  if (standardized.empty()) throw Error(ErrorCategory::Domain, "envelope report of an empty sample");
  EmpiricalReport r;
  r.sorted.assign(standardized.begin(), standardized.end());
  std::sort(r.sorted.begin(), r.sorted.end());
  r.xi = bound.xi;
  r.bound_uniform = bound.xi * kUniformBerryEsseen;
  r.slack_level = slack_level;
  r.slack = dkw_slack(slack_level, r.sorted.size());
  r.worst_excess = -INFINITY;

  const double n = static_cast<double>(r.sorted.size());
  std::size_t i = 0;
  while (i < r.sorted.size()) {
    const double x = r.sorted[i];
    std::size_t j = i;
    while (j < r.sorted.size() && r.sorted[j] == x) ++j;
    const double psi = std_normal_cdf(x);
    // Left limit i/n and value j/n of the step at x.
    const double dev = std::max(std::abs(static_cast<double>(j) / n - psi), std::abs(psi - static_cast<double>(i) / n));
    r.ks_distance = std::max(r.ks_distance, dev);
    const double allowed = bound.xi * envelope_c(x);
    r.worst_excess = std::max(r.worst_excess, dev - allowed);
    if (dev > allowed + r.slack) r.envelope_violations += j - i;
    i = j;
  }
  return r;
}

EmpiricalReport envelope_report(std::span<const double> standardized, const Scenario& s, double slack_level) {
  return envelope_report(standardized, xi_coefficient(s), slack_level);
}

std::vector<ConvergenceRow> convergence_diagnostic(const Scenario& s, std::span<const double> radii,
                                                   const SimConfig& cfg) {
  if (!std::is_sorted(radii.begin(), radii.end())) {
    throw Error(ErrorCategory::Domain, "convergence radii must be ascending");
  }
  const double mean = campbell_mean(s);
  const double variance = campbell_variance(s);
  std::vector<ConvergenceRow> rows;
  rows.reserve(radii.size());
  for (double radius : radii) {
    SimConfig at = cfg;
    at.radius = radius;
    const auto samples = monte_carlo(s, at);
    const auto st = sample_stats(samples.values);
    ConvergenceRow row;
    row.radius = radius;
    row.sample_mean = st.mean;
    row.sample_variance = st.variance;
    row.mean_standard_error = std::sqrt(st.variance / static_cast<double>(samples.values.size()));
    row.truncated_mean = campbell_mean(s, radius);
    row.truncated_variance = campbell_variance(s, radius);
    row.mean_gap = std::abs(st.mean - mean);
    row.variance_gap = std::abs(st.variance - variance);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hcn
