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

#include "hcngauss/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "hcngauss/errors.hpp"
#include "hcngauss/quadrature.hpp"

namespace hcn {

namespace {

constexpr double kInvSqrtTwoPi = 0.3989422804014327;  // 1 / sqrt(2 pi)

// mu(t) = c t^(p-1) for every t >= from.
struct PowerForm {
  double c;
  double p;
  double from;
};

std::optional<PowerForm> power_form(const RadialIntensity& intensity) {
  if (std::holds_alternative<Homogeneous2D>(intensity)) return PowerForm{2.0 * std::numbers::pi, 2.0, 0.0};
  if (const auto* r = std::get_if<PowerRadial>(&intensity)) return PowerForm{r->c, r->p, 0.0};
  const auto& table = std::get<PiecewiseTable>(intensity);
  if (table.tail && !table.knots.empty()) return PowerForm{table.tail->c, table.tail->p, table.knots.back().t};
  return std::nullopt;
}

double support_end(const RadialIntensity& intensity) {
  if (const auto* table = std::get_if<PiecewiseTable>(&intensity)) {
    if (!table->tail) return table->knots.empty() ? 0.0 : table->knots.back().t;
  }
  return kInfiniteRadius;
}

[[noreturn]] void throw_divergent() {
  throw Error(ErrorCategory::Divergence, "tier integral diverges: mu growth exceeds alpha-1");
}

// Leading decay exponent e of G(t)^m ~ t^-e.
double decay_exponent(const PathLossModel& g, int m) { return g.alpha * m; }

// integral_a^b c t^(p-1) G(t)^m dt for a well inside the power-law regime,
// summing the convergent expansion of G^m in powers of 1/t.
double series_tail(const PathLossModel& g, int m, double c, double p, double a, double b) {
  if (!(decay_exponent(g, m) > p)) throw_divergent();
  auto term = [&](double coef, double e) {
    const double upper = std::isinf(b) ? 0.0 : std::pow(b, p - e);
    return c * coef * (std::pow(a, p - e) - upper) / (e - p);
  };
  if (g.family == PathLossFamily::MinOneInversePower) return term(1.0, g.alpha * m);

  double sum = 0.0;
  double coef = 1.0;
  for (int j = 0; j < 400; ++j) {
    double e = 0.0;
    double next = 0.0;
    if (g.family == PathLossFamily::InverseOnePlusPower) {
      // (1 + t^a)^-m = sum_j binom(-m, j) t^(-a (m + j))
      e = g.alpha * (m + j);
      next = -(m + j) / static_cast<double>(j + 1);
    } else {
      // (1 + t)^(-a m) = t^(-a m) sum_j binom(-a m, j) t^-j
      e = g.alpha * m + j;
      next = -(g.alpha * m + j) / static_cast<double>(j + 1);
    }
    const double t = term(coef, e);
    sum += t;
    if (j > 0 && std::abs(t) <= 1e-17 * std::abs(sum)) break;
    coef *= next;
  }
  return sum;
}

// Start of the asymptotic tail region for quadrature.
double tail_start(const PathLossModel& g, int m, const RadialIntensity& intensity) {
  double start = std::max(1000.0, 20.0 * g.alpha * m);
  for (double b : radial_breakpoints(intensity)) start = std::max(start, 2.0 * b);
  return start;
}

double power_closed_form(const PathLossModel& g, int m, double c, double p, double radius) {
  const double e = decay_exponent(g, m);
  if (!(e > p)) throw_divergent();
  if (radius == 0.0 || c == 0.0) return 0.0;
  switch (g.family) {
    case PathLossFamily::InverseOnePlusPower: {
      // v = t^alpha turns the integral into an incomplete beta function.
      const double a = p / g.alpha;
      const double b = m - a;
      const double full = c / g.alpha * boost::math::beta(a, b);
      if (std::isinf(radius)) return full;
      const double ra = std::pow(radius, g.alpha);
      return full * boost::math::ibeta(a, b, ra / (1.0 + ra));
    }
    case PathLossFamily::ShiftedInversePower: {
      // w = t / (1 + t)
      const double b = e - p;
      const double full = c * boost::math::beta(p, b);
      if (std::isinf(radius)) return full;
      return full * boost::math::ibeta(p, b, radius / (1.0 + radius));
    }
    case PathLossFamily::MinOneInversePower: {
      if (radius <= 1.0) return c * std::pow(radius, p) / p;
      const double upper = std::isinf(radius) ? 0.0 : std::pow(radius, p - e);
      return c / p + c * (1.0 - upper) / (e - p);
    }
  }
  return 0.0;
}

double quadrature_integral(const TierConfig& tier, int m, double radius) {
  const auto& g = tier.pathloss;
  const auto form = power_form(tier.intensity);
  const double end = std::min(radius, support_end(tier.intensity));
  if (form && std::isinf(end) && !(decay_exponent(g, m) > form->p)) throw_divergent();

  const double head_end = std::min(end, tail_start(g, m, tier.intensity));
  std::vector<double> breaks = radial_breakpoints(tier.intensity);
  for (double k : path_loss_kinks(g)) breaks.push_back(k);

  const auto& intensity = tier.intensity;
  const auto head = quadrature::integrate(
      [&](double t) { return std::pow(g(t), m) * radial_density(intensity, t); }, 0.0, head_end, breaks);
  double value = head.value;
  if (end > head_end) value += series_tail(g, m, form->c, form->p, head_end, end);
  return value;
}

std::string tier_prefix(std::size_t k) { return "tier " + std::to_string(k + 1) + ": "; }

void check_tier(const TierConfig& tier, std::size_t k) {
  const auto report = validate_tier(tier);
  if (!report.ok()) throw Error(ErrorCategory::Validation, tier_prefix(k) + report.violations.front().assumption);
}

struct Cumulants {
  double mean = 0.0;
  double variance = 0.0;
  double third = 0.0;
  std::vector<double> variance_terms;
  std::vector<double> third_terms;
};

Cumulants cumulants(const Scenario& s, double radius, int highest) {
  Cumulants out;
  out.variance_terms.assign(s.tiers.size(), 0.0);
  out.third_terms.assign(s.tiers.size(), 0.0);
  for (std::size_t k = 0; k < s.tiers.size(); ++k) {
    const auto& tier = s.tiers[k];
    check_tier(tier, k);
    if (tier.lambda == 0.0) continue;
    try {
      const auto h = fading_moments(tier.fading);
      const double lp = tier.lambda * tier.power;
      out.mean += lp * h.m1 * tier_integral(tier, 1, radius);
      if (highest >= 2) {
        out.variance_terms[k] = lp * tier.power * h.m2 * tier_integral(tier, 2, radius);
        out.variance += out.variance_terms[k];
      }
      if (highest >= 3) {
        out.third_terms[k] = lp * tier.power * tier.power * h.m3 * tier_integral(tier, 3, radius);
        out.third += out.third_terms[k];
      }
    } catch (const Error& e) {
      throw Error(e.category(), tier_prefix(k) + e.what());
    }
  }
  return out;
}

double relative_spread(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi > 0.0 ? (*hi - *lo) / *hi : 0.0;
}

}  // namespace

double tier_integral(const TierConfig& tier, int moment, double radius, IntegrationRoute route) {
  if (moment < 1) throw Error(ErrorCategory::Domain, "tier integral moment must be >= 1");
  if (!(radius >= 0.0)) throw Error(ErrorCategory::Domain, "integration radius must be >= 0");
  if (route == IntegrationRoute::Auto && !std::holds_alternative<PiecewiseTable>(tier.intensity)) {
    const auto form = *power_form(tier.intensity);
    return power_closed_form(tier.pathloss, moment, form.c, form.p, radius);
  }
  return quadrature_integral(tier, moment, radius);
}

double power_weighted_integral(const PathLossModel& pathloss, int moment, double c, double p) {
  return power_closed_form(pathloss, moment, c, p, kInfiniteRadius);
}

TierIntegrals tier_integrals(const TierConfig& tier, double radius) {
  TierIntegrals out;
  for (int m = 1; m <= 3; ++m) out.value[m - 1] = tier_integral(tier, m, radius);
  return out;
}

double campbell_mean(const Scenario& s, double radius) { return cumulants(s, radius, 1).mean; }

double campbell_variance(const Scenario& s, double radius) { return cumulants(s, radius, 2).variance; }

double campbell_third_cumulant(const Scenario& s, double radius) { return cumulants(s, radius, 3).third; }

GaussianBound xi_coefficient(const Scenario& s, double radius) {
  const auto moments = cumulants(s, radius, 2);
  if (!(moments.variance > 0.0)) {
    throw Error(ErrorCategory::Degenerate, "interference variance is zero; standardization undefined");
  }
  // Xi is invariant under a common power scale, so P^3 is formed relative to
  // the loudest active tier; the sums are then normalized by their largest
  // variance term before the 3/2 power.
  double loudest = 0.0;
  for (const auto& tier : s.tiers) {
    if (tier.lambda > 0.0) loudest = std::max(loudest, tier.power);
  }
  Scenario relative = s;
  for (auto& tier : relative.tiers) tier.power /= loudest;
  const auto c = cumulants(relative, radius, 3);
  const double scale = *std::max_element(c.variance_terms.begin(), c.variance_terms.end());
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < c.variance_terms.size(); ++k) {
    num += c.third_terms[k] / scale;
    den += c.variance_terms[k] / scale;
  }
  const double xi = num / (std::sqrt(scale) * den * std::sqrt(den));
  return {xi, moments.mean, moments.variance, radius};
}

double xi_homogeneous(const Scenario& s) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < s.tiers.size(); ++k) {
    const auto& tier = s.tiers[k];
    check_tier(tier, k);
    if (!std::holds_alternative<Homogeneous2D>(tier.intensity)) {
      throw Error(ErrorCategory::Parameter, tier_prefix(k) + "homogeneous form needs Homogeneous2D intensity");
    }
    if (tier.lambda == 0.0) continue;
    const auto h = fading_moments(tier.fading);
    const double p2 = tier.power * tier.power;
    num += tier.lambda * p2 * tier.power * h.m3 * power_weighted_integral(tier.pathloss, 3, 1.0, 2.0);
    den += tier.lambda * p2 * h.m2 * power_weighted_integral(tier.pathloss, 2, 1.0, 2.0);
  }
  if (!(den > 0.0)) throw Error(ErrorCategory::Degenerate, "interference variance is zero");
  return kInvSqrtTwoPi * num / std::pow(den, 1.5);
}

double xi_identical_tiers(const TierConfig& tier, std::size_t tier_count) {
  check_tier(tier, 0);
  if (!std::holds_alternative<Homogeneous2D>(tier.intensity)) {
    throw Error(ErrorCategory::Parameter, "identical-tier form needs Homogeneous2D intensity");
  }
  if (tier_count == 0 || !(tier.lambda > 0.0)) {
    throw Error(ErrorCategory::Degenerate, "identical-tier form needs K >= 1 and lambda > 0");
  }
  const auto h = fading_moments(tier.fading);
  const double j2 = power_weighted_integral(tier.pathloss, 2, 1.0, 2.0);
  const double j3 = power_weighted_integral(tier.pathloss, 3, 1.0, 2.0);
  return kInvSqrtTwoPi / std::sqrt(static_cast<double>(tier_count) * tier.lambda) * h.m3 /
         std::pow(h.m2, 1.5) * j3 / std::pow(j2, 1.5);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double envelope_c(double x) {
  const double ax = std::abs(x);
  return std::min(kUniformBerryEsseen, kNonUniformBerryEsseen / (1.0 + ax * ax * ax));
}

double envelope_crossover() { return std::cbrt(kNonUniformBerryEsseen / kUniformBerryEsseen - 1.0); }

EnvelopePoint cdf_envelope(const GaussianBound& bound, double x) {
  EnvelopePoint p;
  p.x = x;
  p.psi = std_normal_cdf(x);
  const double half_width = bound.xi * envelope_c(x);
  p.lower_unclamped = p.psi - half_width;
  p.upper_unclamped = p.psi + half_width;
  p.lower = std::clamp(p.lower_unclamped, 0.0, 1.0);
  p.upper = std::clamp(p.upper_unclamped, 0.0, 1.0);
  return p;
}

EnvelopePoint cdf_envelope(const Scenario& s, double x) { return cdf_envelope(xi_coefficient(s), x); }

double lemma2_lower_bound(const Scenario& s) {
  double b_norm2 = 0.0;
  double c_norm2 = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 0; k < s.tiers.size(); ++k) {
    const auto& tier = s.tiers[k];
    check_tier(tier, k);
    if (tier.lambda == 0.0) continue;
    const auto h = fading_moments(tier.fading);
    const double a = tier.lambda * tier_integral(tier, 3);
    const double b = tier.lambda * tier_integral(tier, 2);
    const double c = tier.power * tier.power * h.m2;
    b_norm2 += b * b;
    c_norm2 += c * c;
    weighted += a * c * std::sqrt(c);
  }
  if (!(b_norm2 > 0.0)) throw Error(ErrorCategory::Degenerate, "interference variance is zero");
  const double norms = std::sqrt(c_norm2) * std::sqrt(b_norm2);
  return weighted / (norms * std::sqrt(norms));
}

ScalingCertificate lemma1_scaling_certificate(const Scenario& s, std::span<const double> factors,
                                              std::span<const std::size_t> scaled_tiers) {
  ScalingCertificate cert;
  cert.uniform = scaled_tiers.empty();
  std::vector<double> by_factor;
  std::vector<double> by_norm;
  for (double factor : factors) {
    if (!(factor > 0.0)) throw Error(ErrorCategory::Domain, "scaling factors must be > 0");
    Scenario scaled = s;
    for (std::size_t k = 0; k < scaled.tiers.size(); ++k) {
      const bool selected = cert.uniform || std::find(scaled_tiers.begin(), scaled_tiers.end(), k) != scaled_tiers.end();
      if (selected) scaled.tiers[k].lambda *= factor;
    }
    ScalingRow row;
    row.factor = factor;
    row.xi = xi_coefficient(scaled).xi;
    double norm2 = 0.0;
    for (const auto& tier : scaled.tiers) norm2 += tier.lambda * tier.lambda;
    row.lambda_norm = std::sqrt(norm2);
    row.xi_sqrt_factor = row.xi * std::sqrt(factor);
    row.xi_sqrt_lambda_norm = row.xi * std::sqrt(row.lambda_norm);
    by_factor.push_back(row.xi_sqrt_factor);
    by_norm.push_back(row.xi_sqrt_lambda_norm);
    cert.rows.push_back(row);
  }
  cert.spread_sqrt_factor = relative_spread(by_factor);
  cert.spread_sqrt_lambda_norm = relative_spread(by_norm);
  return cert;
}

double laplace_exponent(const TierConfig& tier, double s, double radius) {
  if (!(s >= 0.0)) throw Error(ErrorCategory::Domain, "Laplace argument s must be >= 0");
  if (!(radius >= 0.0)) throw Error(ErrorCategory::Domain, "integration radius must be >= 0");
  if (s == 0.0 || tier.lambda == 0.0) return 0.0;

  const auto& g = tier.pathloss;
  const auto& fading = tier.fading;
  const auto& intensity = tier.intensity;
  const auto h = fading_moments(fading);
  const double sp = s * tier.power;
  const auto form = power_form(intensity);
  const double end = std::min(radius, support_end(intensity));
  if (form && std::isinf(end) && !(g.alpha > form->p)) throw_divergent();

  // Beyond `start`, s P H G(t) is small enough for a third-order expansion of
  // 1 - E[exp(-x H)] to be exact to double precision.
  double start = tail_start(g, 3, intensity);
  start = std::max(start, std::pow(1e4 * sp * h.m2 / h.m1, 1.0 / g.alpha));
  const double head_end = std::min(end, start);

  std::vector<double> breaks = radial_breakpoints(intensity);
  for (double k : path_loss_kinks(g)) breaks.push_back(k);
  const auto head = quadrature::integrate(
      [&](double t) { return fading_laplace_complement(fading, sp * g(t)) * radial_density(intensity, t); },
      0.0, head_end, breaks, 1e-12);
  double value = head.value;
  if (end > head_end) {
    const double i1 = series_tail(g, 1, form->c, form->p, head_end, end);
    const double i2 = series_tail(g, 2, form->c, form->p, head_end, end);
    const double i3 = series_tail(g, 3, form->c, form->p, head_end, end);
    value += sp * h.m1 * i1 - sp * sp * h.m2 * i2 / 2.0 + sp * sp * sp * h.m3 * i3 / 6.0;
  }
  if (!std::isfinite(value)) throw_divergent();
  return tier.lambda * value;
}

std::vector<double> laplace_transform(const Scenario& scenario, std::span<const double> svals, double radius) {
  for (std::size_t k = 0; k < scenario.tiers.size(); ++k) check_tier(scenario.tiers[k], k);
  std::vector<double> out;
  out.reserve(svals.size());
  for (double s : svals) {
    if (!(s >= 0.0)) throw Error(ErrorCategory::Domain, "Laplace argument s must be >= 0");
    double exponent = 0.0;
    for (std::size_t k = 0; k < scenario.tiers.size(); ++k) {
      try {
        exponent += laplace_exponent(scenario.tiers[k], s, radius);
      } catch (const Error& e) {
        throw Error(e.category(), tier_prefix(k) + e.what());
      }
    }
    out.push_back(std::exp(-exponent));
  }
  return out;
}

}  // namespace hcn
