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

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/random/mersenne_twister.hpp>

namespace hcn {

/// Random stream used everywhere a draw is needed. Each concurrent task must
/// own its stream exclusively.
using RandomStream = boost::random::mt19937_64;

// ---------------------------------------------------------------------------
// Path loss
// ---------------------------------------------------------------------------

enum class PathLossFamily {
  InverseOnePlusPower,  // G(t) = 1 / (1 + t^alpha)
  MinOneInversePower,   // G(t) = min(1, t^-alpha)
  ShiftedInversePower,  // G(t) = (1 + t)^-alpha
};

struct PathLossModel {
  PathLossFamily family = PathLossFamily::InverseOnePlusPower;
  double alpha = 4.0;

  /// G(t) without argument checking; t must be >= 0.
  double operator()(double t) const noexcept {
    switch (family) {
      case PathLossFamily::InverseOnePlusPower:
        return 1.0 / (1.0 + pow_alpha(t));
      case PathLossFamily::MinOneInversePower:
        return t <= 1.0 ? 1.0 : 1.0 / pow_alpha(t);
      case PathLossFamily::ShiftedInversePower:
        return 1.0 / pow_alpha(1.0 + t);
    }
    return 0.0;
  }

  /// G(0); finite for every family.
  double at_origin() const noexcept { return 1.0; }

  bool operator==(const PathLossModel&) const = default;

 private:
  // Integer exponents are the common case; std::pow would dominate the
  // simulation inner loop.
  double pow_alpha(double t) const noexcept {
    if (alpha == 4.0) {
      const double t2 = t * t;
      return t2 * t2;
    }
    const int n = static_cast<int>(alpha);
    if (static_cast<double>(n) == alpha && n > 0 && n <= 16) {
      double r = t;
      for (int i = 1; i < n; ++i) r *= t;
      return r;
    }
    return std::pow(t, alpha);
  }
};

/// G(t). Throws Error{Domain} for negative t.
double path_loss_eval(const PathLossModel& model, double t);

/// Points where G is not smooth (used to split quadrature ranges).
std::vector<double> path_loss_kinks(const PathLossModel& model);

// ---------------------------------------------------------------------------
// Fading (power gains H)
// ---------------------------------------------------------------------------

struct DeterministicFading {
  double gain = 1.0;
  bool operator==(const DeterministicFading&) const = default;
};

/// Rayleigh amplitude, i.e. exponentially distributed power.
struct RayleighFading {
  double mean_power = 1.0;
  bool operator==(const RayleighFading&) const = default;
};

/// Gamma distributed power with shape m and the given mean.
struct NakagamiFading {
  double m = 1.0;
  double mean_power = 1.0;
  bool operator==(const NakagamiFading&) const = default;
};

/// Non-central chi-square power: |s + CN(0, sigma^2)|^2 with
/// s^2 = K * mean / (K + 1) and sigma^2 = mean / (K + 1).
struct RicianFading {
  double k_factor = 0.0;
  double mean_power = 1.0;
  bool operator==(const RicianFading&) const = default;
};

using FadingModel =
    std::variant<DeterministicFading, RayleighFading, NakagamiFading, RicianFading>;

struct FadingMoments {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

/// First three raw moments of H. Throws Error{Parameter} on invalid parameters.
FadingMoments fading_moments(const FadingModel& model);

/// E[exp(-a H)] for a >= 0.
double fading_laplace(const FadingModel& model, double a);

/// 1 - E[exp(-a H)], evaluated without cancellation for small a.
double fading_laplace_complement(const FadingModel& model, double a);

/// Density q(h) of H; not defined for DeterministicFading (throws Parameter).
double fading_density(const FadingModel& model, double h);

/// Throws Error{Parameter} if the model's parameters are invalid.
void check_fading(const FadingModel& model);

/// Reusable sampler for one fading model. Construction validates parameters.
class FadingSampler {
 public:
  explicit FadingSampler(const FadingModel& model);

  double operator()(RandomStream& rng);

 private:
  enum class Kind { Deterministic, Exponential, Gamma, Rician };
  Kind kind_;
  double scale_ = 1.0;  // gain, mean power, or gamma scale
  double shape_ = 1.0;  // gamma shape
  double los_ = 0.0;    // line-of-sight amplitude s (Rician)
  double sigma_ = 0.0;  // per-component standard deviation (Rician)
};

/// One draw of H.
double fading_sample(const FadingModel& model, RandomStream& rng);

// ---------------------------------------------------------------------------
// Radial intensities mu(t)
// ---------------------------------------------------------------------------

/// mu(t) = 2 pi t: a homogeneous planar process seen from the test point.
struct Homogeneous2D {
  bool operator==(const Homogeneous2D&) const = default;
};

/// mu(t) = c t^(p - 1).
struct PowerRadial {
  double c = 1.0;
  double p = 2.0;
  bool operator==(const PowerRadial&) const = default;
};

struct Knot {
  double t = 0.0;
  double mu = 0.0;
  bool operator==(const Knot&) const = default;
};

/// Linear interpolation between knots, zero before the first knot and after
/// the last one unless a power tail continues it.
struct PiecewiseTable {
  std::vector<Knot> knots;
  std::optional<PowerRadial> tail;
  bool operator==(const PiecewiseTable&) const = default;
};

using RadialIntensity = std::variant<Homogeneous2D, PowerRadial, PiecewiseTable>;

/// mu(t) for t >= 0 (no lambda scaling).
double radial_density(const RadialIntensity& intensity, double t);

/// Lambda_n = lambda * integral_0^n mu(t) dt. Throws Error{Domain} for n < 0.
double radial_measure(const RadialIntensity& intensity, double lambda, double n);

/// Smallest t with lambda * integral_0^t mu = v, for 0 <= v <= Lambda(infinity).
double radial_measure_inverse(const RadialIntensity& intensity, double lambda, double v);

/// Knots and other points where mu is not smooth.
std::vector<double> radial_breakpoints(const RadialIntensity& intensity);

// ---------------------------------------------------------------------------
// Tiers and scenarios
// ---------------------------------------------------------------------------

struct TierConfig {
  double power = 1.0;
  double lambda = 1.0;
  RadialIntensity intensity = Homogeneous2D{};
  PathLossModel pathloss{};
  FadingModel fading = RayleighFading{};

  bool operator==(const TierConfig&) const = default;
};

struct Scenario {
  std::vector<TierConfig> tiers;

  bool operator==(const Scenario&) const = default;
};

struct Violation {
  std::optional<std::size_t> tier;  // empty for scenario-level violations
  std::string assumption;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  /// One violation per line, "tier <k>: <assumption>".
  std::string to_string() const;
};

ValidationReport validate_tier(const TierConfig& tier);
ValidationReport validate_scenario(const Scenario& scenario);

/// Throws Error{Validation} carrying the report text unless the scenario passes.
void require_valid(const Scenario& scenario);

}  // namespace hcn
