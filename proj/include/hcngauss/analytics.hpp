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

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "hcngauss/model.hpp"

namespace hcn {

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

/// Berry-Esseen constants of the uniform and non-uniform envelope branches.
inline constexpr double kUniformBerryEsseen = 0.4785;
inline constexpr double kNonUniformBerryEsseen = 31.935;

enum class IntegrationRoute {
  Auto,        // closed form where one exists, quadrature otherwise
  Quadrature,  // always adaptive Gauss-Kronrod head plus asymptotic tail
};

/// integral_0^radius G(t)^moment mu(t) dt for one tier (lambda not applied).
///
/// A finite radius gives the integral over the disc actually simulated; the
/// default is the whole plane. Throws Error{Divergence} when the growth
/// constraint fails and Error{Domain} for moment < 1 or a negative radius.
double tier_integral(const TierConfig& tier, int moment, double radius = kInfiniteRadius,
                     IntegrationRoute route = IntegrationRoute::Auto);

/// integral_0^inf G(t)^moment * c * t^(p-1) dt; PowerRadial closed form.
double power_weighted_integral(const PathLossModel& pathloss, int moment, double c, double p);

struct TierIntegrals {
  std::array<double, 3> value{};  // I1, I2, I3
};

TierIntegrals tier_integrals(const TierConfig& tier, double radius = kInfiniteRadius);

/// E[I] = sum_k lambda_k P_k m_H I1_k.
double campbell_mean(const Scenario& s, double radius = kInfiniteRadius);

/// Var[I] = sum_k lambda_k P_k^2 m_H2 I2_k.
double campbell_variance(const Scenario& s, double radius = kInfiniteRadius);

/// Third cumulant sum_k lambda_k P_k^3 m_H3 I3_k.
double campbell_third_cumulant(const Scenario& s, double radius = kInfiniteRadius);

struct GaussianBound {
  double xi = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double radius = kInfiniteRadius;
};

/// Scaling coefficient of the Kolmogorov-Smirnov bound together with the
/// moments used to standardize. Throws Error{Degenerate} on zero variance.
GaussianBound xi_coefficient(const Scenario& s, double radius = kInfiniteRadius);

/// Xi in the homogeneous-plane form, with the explicit 1/sqrt(2 pi) prefactor
/// and integral_0^inf G^m(t) t dt. Every tier must use Homogeneous2D.
double xi_homogeneous(const Scenario& s);

/// Xi for K identical homogeneous tiers.
double xi_identical_tiers(const TierConfig& tier, std::size_t tier_count);

double std_normal_cdf(double x);

/// c(x) = min(0.4785, 31.935 / (1 + |x|^3)).
double envelope_c(double x);

/// |x| at which the two branches of c(x) meet.
double envelope_crossover();

struct EnvelopePoint {
  double x = 0.0;
  double psi = 0.0;
  double lower_unclamped = 0.0;
  double upper_unclamped = 0.0;
  double lower = 0.0;  // clamped to [0, 1]
  double upper = 0.0;
};

EnvelopePoint cdf_envelope(const GaussianBound& bound, double x);
EnvelopePoint cdf_envelope(const Scenario& s, double x);

/// Fading-free lower bound on Xi (equal to Xi for deterministic fading when
/// the per-tier vectors are parallel). Tiers with lambda = 0 are inactive and
/// excluded from the norms.
double lemma2_lower_bound(const Scenario& s);

struct ScalingRow {
  double factor = 1.0;
  double xi = 0.0;
  double lambda_norm = 0.0;            // ||lambda||_2 after scaling
  double xi_sqrt_factor = 0.0;         // Xi * sqrt(factor)
  double xi_sqrt_lambda_norm = 0.0;    // Xi * sqrt(||lambda||_2)
};

struct ScalingCertificate {
  std::vector<ScalingRow> rows;
  bool uniform = true;  // every tier scaled
  /// (max - min) / max of Xi * sqrt(factor) across rows.
  double spread_sqrt_factor = 0.0;
  /// (max - min) / max of Xi * sqrt(||lambda||_2) across rows.
  double spread_sqrt_lambda_norm = 0.0;
};

/// Re-evaluates Xi with the intensities multiplied by each factor. With an
/// empty `scaled_tiers` every tier is scaled; otherwise only the listed ones.
ScalingCertificate lemma1_scaling_certificate(const Scenario& s, std::span<const double> factors,
                                              std::span<const std::size_t> scaled_tiers = {});

/// Exponent lambda * integral (1 - E[exp(-s P H G(t))]) mu(t) dt for one tier.
double laplace_exponent(const TierConfig& tier, double s, double radius = kInfiniteRadius);

/// E[exp(-s I)] for each s. Throws Error{Domain} for negative s.
std::vector<double> laplace_transform(const Scenario& scenario, std::span<const double> svals,
                                      double radius = kInfiniteRadius);

}  // namespace hcn
