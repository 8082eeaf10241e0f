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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hcngauss/errors.hpp"
#include "hcngauss/io.hpp"
#include "hcngauss/model.hpp"
#include "oracles.hpp"

using namespace hcn;
using doctest::Approx;

namespace {

const std::vector<PathLossFamily> kFamilies{PathLossFamily::InverseOnePlusPower, PathLossFamily::MinOneInversePower,
                                            PathLossFamily::ShiftedInversePower};

TierConfig unit_tier(double alpha = 4.0) {
  return {1.0, 1.0, Homogeneous2D{}, {PathLossFamily::InverseOnePlusPower, alpha}, RayleighFading{1.0}};
}

// h^k q(h), with the far tail where q underflows mapped to 0.
double moment_density(const FadingModel& f, double h, int k) {
  const double q = fading_density(f, h);
  return q == 0.0 ? 0.0 : std::pow(h, k) * q;
}

bool mentions(const ValidationReport& r, const std::string& text) {
  return r.to_string().find(text) != std::string::npos;
}

}  // namespace

TEST_CASE("path loss examples") {
  const PathLossModel g4{PathLossFamily::InverseOnePlusPower, 4.0};
  CHECK(path_loss_eval(g4, 0.0) == 1.0);
  CHECK(path_loss_eval(g4, 1.0) == 0.5);
  CHECK(path_loss_eval({PathLossFamily::MinOneInversePower, 3.0}, 2.0) == 0.125);
  CHECK(path_loss_eval({PathLossFamily::ShiftedInversePower, 3.0}, 1.0) == 0.125);
  CHECK_THROWS_AS(path_loss_eval(g4, -0.1), Error);
  try {
    path_loss_eval(g4, -1.0);
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::Domain);
  }
}

TEST_CASE("path loss fast path matches std::pow") {
  for (auto f : kFamilies) {
    for (double alpha : {2.5, 3.0, 4.0, 5.0, 7.3}) {
      const PathLossModel g{f, alpha};
      for (double t : {0.0, 0.3, 1.0, 1.7, 12.0, 400.0}) {
        double expected = 0.0;
        switch (f) {
          case PathLossFamily::InverseOnePlusPower: expected = 1.0 / (1.0 + std::pow(t, alpha)); break;
          case PathLossFamily::MinOneInversePower: expected = std::min(1.0, std::pow(t, -alpha)); break;
          case PathLossFamily::ShiftedInversePower: expected = std::pow(1.0 + t, -alpha); break;
        }
        CHECK(g(t) == Approx(expected).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("property: path loss bounded by G(0) and non-increasing") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha_dist(2.01, 8.0);
  std::exponential_distribution<double> t_dist(0.3);
  for (int trial = 0; trial < 2000; ++trial) {
    const PathLossModel g{kFamilies[trial % 3], alpha_dist(rng)};
    double a = t_dist(rng);
    double b = t_dist(rng);
    if (a > b) std::swap(a, b);
    CHECK(g(b) <= g(a));
    CHECK(g(a) <= g.at_origin());
    // G(t) t^alpha stays bounded.
    const double far = 1e3 + b;
    CHECK(g(far) * std::pow(far, g.alpha) <= 1.0 + 1e-9);
  }
}

TEST_CASE("fading moment examples") {
  const auto d = fading_moments(DeterministicFading{1.0});
  CHECK(d.m1 == 1.0);
  CHECK(d.m2 == 1.0);
  CHECK(d.m3 == 1.0);
  const auto r = fading_moments(RayleighFading{1.0});
  CHECK(r.m1 == Approx(1.0).epsilon(1e-15));
  CHECK(r.m2 == Approx(2.0).epsilon(1e-15));
  CHECK(r.m3 == Approx(6.0).epsilon(1e-15));
  const auto n = fading_moments(NakagamiFading{2.0, 1.0});
  CHECK(n.m1 == Approx(1.0).epsilon(1e-15));
  CHECK(n.m2 == Approx(1.5).epsilon(1e-15));
  CHECK(n.m3 == Approx(3.0).epsilon(1e-15));
}

TEST_CASE("Rician moments agree with quadrature of the density") {
  for (double k : {0.0, 0.5, 3.0, 10.0}) {
    for (double omega : {0.5, 1.0, 2.0}) {
      const FadingModel f = RicianFading{k, omega};
      const auto m = fading_moments(f);
      const double mass = oracle::half_line([&](double h) { return fading_density(f, h); });
      CHECK(mass == Approx(1.0).epsilon(1e-10));
      const double q1 = oracle::half_line([&](double h) { return moment_density(f, h, 1); });
      const double q2 = oracle::half_line([&](double h) { return moment_density(f, h, 2); });
      const double q3 = oracle::half_line([&](double h) { return moment_density(f, h, 3); });
      CHECK(m.m1 == Approx(q1).epsilon(1e-10));
      CHECK(m.m2 == Approx(q2).epsilon(1e-10));
      CHECK(m.m3 == Approx(q3).epsilon(1e-10));
    }
  }
  // K = 0 is Rayleigh.
  const auto r0 = fading_moments(RicianFading{0.0, 1.0});
  CHECK(r0.m3 == Approx(6.0).epsilon(1e-14));
}

TEST_CASE("fading Laplace transform agrees with the density") {
  const std::vector<FadingModel> models{RayleighFading{1.3}, NakagamiFading{0.7, 1.0}, NakagamiFading{3.0, 2.0},
                                        RicianFading{2.0, 1.0}};
  for (const auto& f : models) {
    for (double a : {1e-6, 0.1, 1.0, 25.0}) {
      const double ref = oracle::half_line([&](double h) { return std::exp(-a * h) * fading_density(f, h); });
      CHECK(fading_laplace(f, a) == Approx(ref).epsilon(1e-9));
      CHECK(fading_laplace(f, a) + fading_laplace_complement(f, a) == Approx(1.0).epsilon(1e-14));
    }
  }
  CHECK(fading_laplace(DeterministicFading{2.0}, 0.5) == Approx(std::exp(-1.0)).epsilon(1e-15));
  // Complement stays accurate where 1 - L(a) cancels.
  CHECK(fading_laplace_complement(RayleighFading{1.0}, 1e-12) == Approx(1e-12).epsilon(1e-9));
}

TEST_CASE("property: Jensen ordering of fading moments") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double omega = 0.1 + 5.0 * u(rng);
    FadingModel f;
    switch (trial % 4) {
      case 0: f = DeterministicFading{omega}; break;
      case 1: f = RayleighFading{omega}; break;
      case 2: f = NakagamiFading{0.5 + 10.0 * u(rng), omega}; break;
      default: f = RicianFading{20.0 * u(rng), omega}; break;
    }
    const auto m = fading_moments(f);
    CHECK(m.m1 > 0.0);
    CHECK(m.m3 >= std::pow(m.m2, 1.5) * (1.0 - 1e-12));
    CHECK(std::pow(m.m2, 1.5) >= std::pow(m.m1, 3.0) * (1.0 - 1e-12));
    if (trial % 4 == 0) {
      CHECK(m.m3 == Approx(std::pow(m.m2, 1.5)).epsilon(1e-14));
      CHECK(m.m2 == Approx(m.m1 * m.m1).epsilon(1e-14));
    }
  }
}

TEST_CASE("fading parameter errors") {
  auto category = [](const FadingModel& f) {
    try {
      check_fading(f);
    } catch (const Error& e) {
      return e.category();
    }
    return ErrorCategory::Io;
  };
  CHECK(category(NakagamiFading{0.4, 1.0}) == ErrorCategory::Parameter);
  CHECK(category(RayleighFading{0.0}) == ErrorCategory::Parameter);
  CHECK(category(RicianFading{1.0, -1.0}) == ErrorCategory::Parameter);
  CHECK_THROWS_AS(fading_moments(RayleighFading{-2.0}), Error);
}

TEST_CASE("fading sampling examples") {
  RandomStream rng(2024);
  for (int i = 0; i < 10; ++i) CHECK(fading_sample(DeterministicFading{2.5}, rng) == 2.5);

  constexpr int kDraws = 1000000;
  FadingSampler rayleigh(RayleighFading{1.0});
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) sum += rayleigh(rng);
  CHECK(std::abs(sum / kDraws - 1.0) <= 0.01);

  FadingSampler nakagami(NakagamiFading{2.0, 1.0});
  double sum2 = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double h = nakagami(rng);
    sum2 += h * h;
  }
  CHECK(std::abs(sum2 / kDraws - 1.5) <= 0.01);
}

TEST_CASE("property: sampled moments converge to fading_moments") {
  // Tolerance: 4 standard errors of each sample moment, from the exact
  // variance of H^k computed with the moments of order 2k.
  RandomStream rng(99);
  constexpr int kDraws = 400000;
  const std::vector<FadingModel> models{RayleighFading{0.5}, NakagamiFading{0.8, 1.5}, RicianFading{4.0, 1.0}};
  for (const auto& f : models) {
    FadingSampler sampler(f);
    double s1 = 0.0, s2 = 0.0, s4 = 0.0;
    for (int i = 0; i < kDraws; ++i) {
      const double h = sampler(rng);
      s1 += h;
      s2 += h * h;
      s4 += h * h * h * h;
    }
    const auto m = fading_moments(f);
    const double m4 = oracle::half_line([&](double h) { return moment_density(f, h, 4); });
    const double se1 = std::sqrt((m.m2 - m.m1 * m.m1) / kDraws);
    const double se2 = std::sqrt((m4 - m.m2 * m.m2) / kDraws);
    CHECK(std::abs(s1 / kDraws - m.m1) <= 4.0 * se1);
    CHECK(std::abs(s2 / kDraws - m.m2) <= 4.0 * se2);
    CHECK(s4 / kDraws == Approx(m4).epsilon(0.05));
  }
}

TEST_CASE("radial measure examples") {
  CHECK(radial_measure(Homogeneous2D{}, 1.0, 10.0) == Approx(100.0 * oracle::kPi).epsilon(1e-15));
  CHECK(radial_measure(Homogeneous2D{}, 0.0, 5.0) == 0.0);
  CHECK(radial_measure(PowerRadial{1.0, 3.0}, 0.0, 5.0) == 0.0);
  CHECK(radial_measure(PowerRadial{1.0, 3.0}, 2.0, 2.0) == Approx(16.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(radial_measure(Homogeneous2D{}, 1.0, -1.0), Error);
}

TEST_CASE("piecewise table measure and inverse") {
  PiecewiseTable table{{{0.0, 0.0}, {1.0, 2.0}, {3.0, 2.0}, {4.0, 0.5}}, std::nullopt};
  const RadialIntensity intensity = table;
  CHECK(radial_density(intensity, 0.5) == Approx(1.0));
  CHECK(radial_density(intensity, 5.0) == 0.0);
  for (double n : {0.25, 1.0, 2.2, 3.5, 4.0, 9.0}) {
    double ref = 0.0;
    double a = 0.0;
    for (double knot : {1.0, 3.0, 4.0}) {
      const double b = std::min(knot, n);
      if (b > a) ref += oracle::finite([&](double t) { return radial_density(intensity, t); }, a, b);
      a = b;
    }
    CHECK(radial_measure(intensity, 1.5, n) == Approx(1.5 * ref).epsilon(1e-10));
  }
  for (double v : {0.01, 0.5, 1.0, 3.0, 6.0}) {
    const double t = radial_measure_inverse(intensity, 1.5, v);
    CHECK(radial_measure(intensity, 1.5, t) == Approx(v).epsilon(1e-12));
  }

  PiecewiseTable tailed{{{0.0, 0.0}, {2.0, 4.0 * oracle::kPi}}, PowerRadial{2.0 * oracle::kPi, 2.0}};
  // Matches the homogeneous plane everywhere.
  for (double n : {0.5, 2.0, 7.0, 40.0}) {
    CHECK(radial_measure(tailed, 0.7, n) == Approx(radial_measure(Homogeneous2D{}, 0.7, n)).epsilon(1e-12));
    const double v = radial_measure(Homogeneous2D{}, 0.7, n);
    CHECK(radial_measure_inverse(tailed, 0.7, v) == Approx(n).epsilon(1e-12));
  }
}

TEST_CASE("property: radial measure monotone in n and linear in lambda") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::vector<RadialIntensity> shapes{
      Homogeneous2D{}, PowerRadial{0.5, 1.5}, PowerRadial{3.0, 2.7},
      PiecewiseTable{{{0.0, 1.0}, {2.0, 0.0}, {5.0, 3.0}}, PowerRadial{1.0, 1.2}}};
  for (int trial = 0; trial < 400; ++trial) {
    const auto& mu = shapes[trial % shapes.size()];
    const double lambda = 3.0 * u(rng);
    double a = 20.0 * u(rng);
    double b = 20.0 * u(rng);
    if (a > b) std::swap(a, b);
    CHECK(radial_measure(mu, lambda, a) <= radial_measure(mu, lambda, b) * (1.0 + 1e-15));
    const double k = 0.1 + 10.0 * u(rng);
    CHECK(radial_measure(mu, k * lambda, b) == Approx(k * radial_measure(mu, lambda, b)).epsilon(1e-13));
  }
}

TEST_CASE("scenario validation") {
  CHECK(validate_scenario(figure1_preset(1.0, 4.0)).ok());

  Scenario bad_alpha{{unit_tier(2.0)}};
  const auto r1 = validate_scenario(bad_alpha);
  CHECK_FALSE(r1.ok());
  CHECK(mentions(r1, "tier 1: alpha > 2 required"));

  Scenario growth{{unit_tier(4.0)}};
  growth.tiers[0].intensity = PowerRadial{1.0, 4.0};
  const auto r2 = validate_scenario(growth);
  CHECK_FALSE(r2.ok());
  CHECK(mentions(r2, "growth constraint"));
  growth.tiers[0].intensity = PowerRadial{1.0, 3.9};
  CHECK(validate_scenario(growth).ok());

  Scenario tail{{unit_tier(3.0)}};
  tail.tiers[0].intensity = PiecewiseTable{{{0.0, 0.0}, {1.0, 1.0}}, PowerRadial{1.0, 3.5}};
  CHECK(mentions(validate_scenario(tail), "growth constraint"));

  Scenario idle{{unit_tier()}};
  idle.tiers[0].lambda = 0.0;
  CHECK(mentions(validate_scenario(idle), "at least one tier with lambda > 0 required"));
  CHECK(mentions(validate_scenario(Scenario{}), "at least one tier required"));

  Scenario many{{unit_tier(), unit_tier()}};
  many.tiers[1].power = -1.0;
  many.tiers[1].fading = NakagamiFading{0.2, 1.0};
  const auto r3 = validate_scenario(many);
  CHECK(r3.violations.size() == 2);
  CHECK(mentions(r3, "tier 2: power > 0 required"));
  CHECK(r3.violations[0].tier == std::optional<std::size_t>(1));

  try {
    require_valid(bad_alpha);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.category() == ErrorCategory::Validation);
    CHECK(std::string(e.what()).find("alpha > 2 required") != std::string::npos);
  }
}
