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

#include "hcngauss/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>

#include "hcngauss/errors.hpp"

namespace hcn {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

// ---------------------------------------------------------------------------

double path_loss_eval(const PathLossModel& model, double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCategory::Domain, "path loss distance must be >= 0");
  }
  return model(t);
}

std::vector<double> path_loss_kinks(const PathLossModel& model) {
  if (model.family == PathLossFamily::MinOneInversePower) return {1.0};
  return {};
}

// ---------------------------------------------------------------------------

void check_fading(const FadingModel& model) {
  std::visit(Overloaded{
                 [](const DeterministicFading& f) {
                   if (!finite_positive(f.gain)) {
                     throw Error(ErrorCategory::Parameter, "deterministic gain must be > 0");
                   }
                 },
                 [](const RayleighFading& f) {
                   if (!finite_positive(f.mean_power)) {
                     throw Error(ErrorCategory::Parameter, "mean power must be > 0");
                   }
                 },
                 [](const NakagamiFading& f) {
                   if (!finite_positive(f.mean_power)) {
                     throw Error(ErrorCategory::Parameter, "mean power must be > 0");
                   }
                   if (!(f.m >= 0.5) || !std::isfinite(f.m)) {
                     throw Error(ErrorCategory::Parameter, "Nakagami m must be >= 0.5");
                   }
                 },
                 [](const RicianFading& f) {
                   if (!finite_positive(f.mean_power)) {
                     throw Error(ErrorCategory::Parameter, "mean power must be > 0");
                   }
                   if (!(f.k_factor >= 0.0) || !std::isfinite(f.k_factor)) {
                     throw Error(ErrorCategory::Parameter, "Rician K-factor must be >= 0");
                   }
                 },
             },
             model);
}

namespace {

// Split of the Rician mean power into line-of-sight and scattered parts.
struct RicianParts {
  double los_power;  // s^2
  double scatter;    // sigma^2
};

RicianParts rician_parts(const RicianFading& f) {
  return {f.k_factor * f.mean_power / (f.k_factor + 1.0), f.mean_power / (f.k_factor + 1.0)};
}

// I0(z) exp(-z), switching to the asymptotic series where I0 overflows.
double bessel_i0_scaled(double z) {
  if (z < 500.0) return std::cyl_bessel_i(0.0, z) * std::exp(-z);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30 && term > 1e-17 * sum; ++k) {
    term *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * z);
    sum += term;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * z);
}

}  // namespace

FadingMoments fading_moments(const FadingModel& model) {
  check_fading(model);
  return std::visit(
      Overloaded{
          [](const DeterministicFading& f) {
            const double h = f.gain;
            return FadingMoments{h, h * h, h * h * h};
          },
          [](const RayleighFading& f) {
            const double w = f.mean_power;
            return FadingMoments{w, 2.0 * w * w, 6.0 * w * w * w};
          },
          [](const NakagamiFading& f) {
            // Gamma(m, w/m): E[H^k] = w^k * m (m+1) ... (m+k-1) / m^k
            const double s = f.mean_power / f.m;
            const double m = f.m;
            return FadingMoments{m * s, m * (m + 1.0) * s * s, m * (m + 1.0) * (m + 2.0) * s * s * s};
          },
          [](const RicianFading& f) {
            const auto [b, a] = rician_parts(f);
            return FadingMoments{a + b, 2.0 * a * a + 4.0 * a * b + b * b,
                                 6.0 * a * a * a + 18.0 * a * a * b + 9.0 * a * b * b + b * b * b};
          },
      },
      model);
}

double fading_laplace_complement(const FadingModel& model, double a) {
  if (!(a >= 0.0)) throw Error(ErrorCategory::Domain, "Laplace argument must be >= 0");
  return std::visit(Overloaded{
                        [a](const DeterministicFading& f) { return -std::expm1(-a * f.gain); },
                        [a](const RayleighFading& f) {
                          const double x = a * f.mean_power;
                          return x / (1.0 + x);
                        },
                        [a](const NakagamiFading& f) {
                          return -std::expm1(-f.m * std::log1p(a * f.mean_power / f.m));
                        },
                        [a](const RicianFading& f) {
                          const auto [b, s2] = rician_parts(f);
                          const double d = a * s2;
                          return -std::expm1(-a * b / (1.0 + d) - std::log1p(d));
                        },
                    },
                    model);
}

double fading_laplace(const FadingModel& model, double a) {
  return 1.0 - fading_laplace_complement(model, a);
}

double fading_density(const FadingModel& model, double h) {
  check_fading(model);
  if (h < 0.0) return 0.0;
  return std::visit(
      Overloaded{
          [](const DeterministicFading&) -> double {
            throw Error(ErrorCategory::Parameter, "deterministic fading has no density");
          },
          [h](const RayleighFading& f) { return std::exp(-h / f.mean_power) / f.mean_power; },
          [h](const NakagamiFading& f) {
            if (h == 0.0) return f.m == 1.0 ? f.m / f.mean_power : (f.m < 1.0 ? INFINITY : 0.0);
            const double scale = f.mean_power / f.m;
            return std::exp((f.m - 1.0) * std::log(h) - h / scale - std::lgamma(f.m) -
                            f.m * std::log(scale));
          },
          [h](const RicianFading& f) {
            const auto [b, s2] = rician_parts(f);
            const double gap = std::sqrt(h) - std::sqrt(b);
            return std::exp(-gap * gap / s2) * bessel_i0_scaled(2.0 * std::sqrt(h * b) / s2) / s2;
          },
      },
      model);
}

FadingSampler::FadingSampler(const FadingModel& model) {
  check_fading(model);
  std::visit(Overloaded{
                 [this](const DeterministicFading& f) {
                   kind_ = Kind::Deterministic;
                   scale_ = f.gain;
                 },
                 [this](const RayleighFading& f) {
                   kind_ = Kind::Exponential;
                   scale_ = f.mean_power;
                 },
                 [this](const NakagamiFading& f) {
                   kind_ = Kind::Gamma;
                   shape_ = f.m;
                   scale_ = f.mean_power / f.m;
                 },
                 [this](const RicianFading& f) {
                   kind_ = Kind::Rician;
                   const auto [b, s2] = rician_parts(f);
                   los_ = std::sqrt(b);
                   sigma_ = std::sqrt(s2 / 2.0);
                 },
             },
             model);
}

double FadingSampler::operator()(RandomStream& rng) {
  switch (kind_) {
    case Kind::Deterministic:
      return scale_;
    case Kind::Exponential:
      return scale_ * boost::random::exponential_distribution<double>(1.0)(rng);
    case Kind::Gamma:
      return boost::random::gamma_distribution<double>(shape_, scale_)(rng);
    case Kind::Rician: {
      boost::random::normal_distribution<double> normal(0.0, sigma_);
      const double re = los_ + normal(rng);
      const double im = normal(rng);
      return re * re + im * im;
    }
  }
  return 0.0;
}

double fading_sample(const FadingModel& model, RandomStream& rng) {
  return FadingSampler(model)(rng);
}

// ---------------------------------------------------------------------------

namespace {

// Integral of mu over [0, t] for a table (without the tail), and over each
// full segment; piecewise-linear so the trapezoid rule is exact.
double table_mass_to(const PiecewiseTable& table, double t) {
  const auto& k = table.knots;
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    if (t <= k[i].t) break;
    const double hi = std::min(t, k[i + 1].t);
    const double width = hi - k[i].t;
    const double slope = (k[i + 1].mu - k[i].mu) / (k[i + 1].t - k[i].t);
    const double mu_hi = k[i].mu + slope * width;
    mass += 0.5 * (k[i].mu + mu_hi) * width;
  }
  if (table.tail && !k.empty() && t > k.back().t) {
    const auto& tail = *table.tail;
    mass += tail.c / tail.p * (std::pow(t, tail.p) - std::pow(k.back().t, tail.p));
  }
  return mass;
}

double table_density(const PiecewiseTable& table, double t) {
  const auto& k = table.knots;
  if (k.empty() || t < k.front().t) return 0.0;
  if (t > k.back().t) {
    return table.tail ? table.tail->c * std::pow(t, table.tail->p - 1.0) : 0.0;
  }
  const auto it = std::upper_bound(k.begin(), k.end(), t, [](double v, const Knot& knot) { return v < knot.t; });
  if (it == k.end()) return k.back().mu;
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  return lo.mu + (hi.mu - lo.mu) * (t - lo.t) / (hi.t - lo.t);
}

double table_inverse(const PiecewiseTable& table, double target) {
  const auto& k = table.knots;
  double cum = 0.0;
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    const double width = k[i + 1].t - k[i].t;
    const double seg = 0.5 * (k[i].mu + k[i + 1].mu) * width;
    if (seg > 0.0 && cum + seg >= target) {
      const double r = std::max(0.0, target - cum);
      const double slope = (k[i + 1].mu - k[i].mu) / width;
      // Root of slope/2 d^2 + mu_i d - r = 0 in the cancellation-free form.
      const double disc = std::max(0.0, k[i].mu * k[i].mu + 2.0 * slope * r);
      const double d = 2.0 * r / (k[i].mu + std::sqrt(disc));
      return k[i].t + std::min(d, width);
    }
    cum += seg;
  }
  if (table.tail && !k.empty()) {
    const auto& tail = *table.tail;
    const double r = std::max(0.0, target - cum);
    return std::pow(std::pow(k.back().t, tail.p) + r * tail.p / tail.c, 1.0 / tail.p);
  }
  if (target <= cum * (1.0 + 1e-12) && !k.empty()) return k.back().t;
  throw Error(ErrorCategory::Domain, "radial measure inverse beyond total mass");
}

}  // namespace

double radial_density(const RadialIntensity& intensity, double t) {
  if (t < 0.0) return 0.0;
  return std::visit(Overloaded{
                        [t](const Homogeneous2D&) { return 2.0 * std::numbers::pi * t; },
                        [t](const PowerRadial& r) { return r.c * std::pow(t, r.p - 1.0); },
                        [t](const PiecewiseTable& table) { return table_density(table, t); },
                    },
                    intensity);
}

double radial_measure(const RadialIntensity& intensity, double lambda, double n) {
  if (!(n >= 0.0)) throw Error(ErrorCategory::Domain, "radial measure radius must be >= 0");
  if (lambda == 0.0) return 0.0;
  return lambda * std::visit(Overloaded{
                                 [n](const Homogeneous2D&) { return std::numbers::pi * n * n; },
                                 [n](const PowerRadial& r) { return r.c * std::pow(n, r.p) / r.p; },
                                 [n](const PiecewiseTable& table) { return table_mass_to(table, n); },
                             },
                             intensity);
}

double radial_measure_inverse(const RadialIntensity& intensity, double lambda, double v) {
  if (!(v >= 0.0)) throw Error(ErrorCategory::Domain, "radial measure value must be >= 0");
  if (!(lambda > 0.0)) throw Error(ErrorCategory::Domain, "radial measure inverse needs lambda > 0");
  const double target = v / lambda;
  return std::visit(Overloaded{
                        [target](const Homogeneous2D&) { return std::sqrt(target / std::numbers::pi); },
                        [target](const PowerRadial& r) { return std::pow(target * r.p / r.c, 1.0 / r.p); },
                        [target](const PiecewiseTable& table) { return table_inverse(table, target); },
                    },
                    intensity);
}

std::vector<double> radial_breakpoints(const RadialIntensity& intensity) {
  if (const auto* table = std::get_if<PiecewiseTable>(&intensity)) {
    std::vector<double> points;
    points.reserve(table->knots.size());
    for (const auto& knot : table->knots) points.push_back(knot.t);
    return points;
  }
  return {};
}

// ---------------------------------------------------------------------------

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << '\n';
    if (violations[i].tier) out << "tier " << *violations[i].tier + 1 << ": ";
    out << violations[i].assumption;
  }
  return out.str();
}

ValidationReport validate_tier(const TierConfig& tier) {
  ValidationReport report;
  auto fail = [&report](std::string what) { report.violations.push_back({std::nullopt, std::move(what)}); };

  if (!finite_positive(tier.power)) fail("power > 0 required");
  if (!(tier.lambda >= 0.0) || !std::isfinite(tier.lambda)) fail("lambda >= 0 required");

  const double alpha = tier.pathloss.alpha;
  const bool alpha_ok = std::isfinite(alpha) && alpha > 2.0;
  if (!alpha_ok) fail("alpha > 2 required");

  try {
    check_fading(tier.fading);
  } catch (const Error& e) {
    fail(e.what());
  }

  auto check_power = [&](const PowerRadial& r, const char* what) {
    if (!(r.c >= 0.0) || !std::isfinite(r.c) || !finite_positive(r.p)) {
      fail(std::string(what) + " requires c >= 0 and p > 0");
    } else if (alpha_ok && !(r.p < alpha)) {
      fail("growth constraint: mu growth exceeds alpha-1");
    }
  };

  std::visit(Overloaded{
                 [](const Homogeneous2D&) {},
                 [&](const PowerRadial& r) { check_power(r, "power radial intensity"); },
                 [&](const PiecewiseTable& table) {
                   if (table.knots.empty()) {
                     fail("piecewise table needs at least one knot");
                     return;
                   }
                   for (std::size_t i = 0; i < table.knots.size(); ++i) {
                     const auto& k = table.knots[i];
                     if (!(k.t >= 0.0) || !std::isfinite(k.t) || !(k.mu >= 0.0) || !std::isfinite(k.mu)) {
                       fail("piecewise table knots need t >= 0 and mu >= 0");
                       return;
                     }
                     if (i > 0 && !(k.t > table.knots[i - 1].t)) {
                       fail("piecewise table knots must be strictly increasing in t");
                       return;
                     }
                   }
                   if (table.tail) check_power(*table.tail, "piecewise table tail");
                 },
             },
             tier.intensity);
  return report;
}

ValidationReport validate_scenario(const Scenario& scenario) {
  ValidationReport report;
  if (scenario.tiers.empty()) {
    report.violations.push_back({std::nullopt, "at least one tier required"});
    return report;
  }
  bool any_active = false;
  for (std::size_t k = 0; k < scenario.tiers.size(); ++k) {
    for (auto v : validate_tier(scenario.tiers[k]).violations) {
      v.tier = k;
      report.violations.push_back(std::move(v));
    }
    any_active = any_active || scenario.tiers[k].lambda > 0.0;
  }
  if (!any_active) report.violations.push_back({std::nullopt, "at least one tier with lambda > 0 required"});
  return report;
}

void require_valid(const Scenario& scenario) {
  const auto report = validate_scenario(scenario);
  if (!report.ok()) throw Error(ErrorCategory::Validation, report.to_string());
}

}  // namespace hcn
