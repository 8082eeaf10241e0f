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

#include "hcngauss/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include <boost/random/exponential_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include "hcngauss/analytics.hpp"
#include "hcngauss/errors.hpp"
#include "hcngauss/io.hpp"

namespace hcn {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Inverse of the tier's radial mean measure, specialized for the built-in
// families so the per-point cost stays a sqrt or a pow.
class RadialInverse {
 public:
  explicit RadialInverse(const TierConfig& tier) : tier_(&tier) {
    if (std::holds_alternative<Homogeneous2D>(tier.intensity)) {
      mode_ = Mode::Homogeneous;
      scale_ = 1.0 / (tier.lambda * std::numbers::pi);
    } else if (const auto* r = std::get_if<PowerRadial>(&tier.intensity)) {
      mode_ = Mode::Power;
      scale_ = r->p / (tier.lambda * r->c);
      inv_p_ = 1.0 / r->p;
    }
  }

  double operator()(double v) const {
    switch (mode_) {
      case Mode::Homogeneous:
        return std::sqrt(v * scale_);
      case Mode::Power:
        return std::pow(v * scale_, inv_p_);
      case Mode::Table:
        break;
    }
    return radial_measure_inverse(tier_->intensity, tier_->lambda, v);
  }

 private:
  enum class Mode { Homogeneous, Power, Table };
  const TierConfig* tier_;
  Mode mode_ = Mode::Table;
  double scale_ = 1.0;
  double inv_p_ = 1.0;
};

// Visits the points of one tier inside [0, radius] as positions v in
// [0, Lambda_n] of the radial mean measure. `fn` may draw from `rng` itself;
// the interleaving is part of the stream layout.
template <class Fn>
void for_each_arrival(double total, Construction construction, RandomStream& rng, Fn&& fn) {
  if (!(total > 0.0)) return;
  if (construction == Construction::PoissonField) {
    // Arrival times of a unit-rate process on [0, Lambda_n]: a Poisson count
    // of i.i.d. points, in order, so a larger disc extends the same prefix.
    boost::random::exponential_distribution<double> gap(1.0);
    double v = gap(rng);
    while (v <= total) {
      fn(v);
      v += gap(rng);
    }
    return;
  }
  const auto count = static_cast<std::size_t>(std::ceil(total));
  boost::random::uniform_01<double> uniform;
  for (std::size_t i = 0; i < count; ++i) fn(uniform(rng) * total);
}

double tier_measure(const TierConfig& tier, double radius) {
  return tier.lambda == 0.0 ? 0.0 : radial_measure(tier.intensity, tier.lambda, radius);
}

// G as a function of the squared distance. Exact without a sqrt when alpha
// is an even integer and the family depends on t only through t^alpha.
class SquaredPathLoss {
 public:
  explicit SquaredPathLoss(const PathLossModel& g) : family_(g.family) {
    const double half = g.alpha / 2.0;
    if (g.family != PathLossFamily::ShiftedInversePower && half == std::floor(half) && half >= 1.0 && half <= 8.0) {
      half_ = static_cast<int>(half);
    }
  }

  bool available() const { return half_ > 0; }

  double operator()(double u) const {
    double p = u;
    for (int i = 1; i < half_; ++i) p *= u;
    if (family_ == PathLossFamily::MinOneInversePower) return u <= 1.0 ? 1.0 : 1.0 / p;
    return 1.0 / (1.0 + p);
  }

 private:
  PathLossFamily family_;
  int half_ = 0;
};

class TierSimulator {
 public:
  explicit TierSimulator(const TierConfig& tier)
      : tier_(&tier), inverse_(tier), squared_(tier.pathloss), fading_(tier.fading) {
    squared_ok_ = std::holds_alternative<Homogeneous2D>(tier.intensity) && squared_.available();
  }

  double draw(double radius, Construction construction, RandomStream& rng) {
    if (const auto* f = std::get_if<RayleighFading>(&tier_->fading)) {
      boost::random::exponential_distribution<double> exponential(1.0);
      return tier_->power * f->mean_power * accumulate(radius, construction, rng, [&] { return exponential(rng); });
    }
    if (const auto* f = std::get_if<DeterministicFading>(&tier_->fading)) {
      return tier_->power * f->gain * accumulate(radius, construction, rng, [] { return 1.0; });
    }
    return tier_->power * accumulate(radius, construction, rng, [&] { return fading_(rng); });
  }

 private:
  template <class Fade>
  double accumulate(double radius, Construction construction, RandomStream& rng, Fade&& fade) {
    const double total = tier_measure(*tier_, radius);
    double acc = 0.0;
    if (squared_ok_) {
      // t^2 = v / (lambda pi) for the homogeneous plane.
      const double scale = 1.0 / (tier_->lambda * std::numbers::pi);
      const double r2 = radius * radius;
      for_each_arrival(total, construction, rng, [&](double v) { acc += fade() * squared_(std::min(v * scale, r2)); });
    } else {
      const auto& g = tier_->pathloss;
      for_each_arrival(total, construction, rng,
                       [&](double v) { acc += fade() * g(std::min(inverse_(v), radius)); });
    }
    return acc;
  }

  const TierConfig* tier_;
  RadialInverse inverse_;
  SquaredPathLoss squared_;
  bool squared_ok_ = false;
  FadingSampler fading_;
};

std::vector<TierSimulator> make_simulators(const Scenario& s) {
  std::vector<TierSimulator> sims;
  sims.reserve(s.tiers.size());
  for (const auto& tier : s.tiers) sims.emplace_back(tier);
  return sims;
}

double replicate(std::vector<TierSimulator>& sims, const SimConfig& cfg, std::uint64_t replication) {
  double total = 0.0;
  for (std::size_t k = 0; k < sims.size(); ++k) {
    RandomStream rng(substream_seed(cfg.seed, replication, k));
    total += sims[k].draw(cfg.radius, cfg.construction, rng);
  }
  return total;
}

// Tier-level assumptions only: a scenario without active tiers is a valid
// (identically zero) interference field for sampling.
void require_valid_tiers(const Scenario& s) {
  ValidationReport report;
  for (std::size_t k = 0; k < s.tiers.size(); ++k) {
    for (auto v : validate_tier(s.tiers[k]).violations) {
      v.tier = k;
      report.violations.push_back(std::move(v));
    }
  }
  if (!report.ok()) throw Error(ErrorCategory::Validation, report.to_string());
}

}  // namespace

void check_config(const SimConfig& cfg) {
  if (!(cfg.radius > 0.0) || !std::isfinite(cfg.radius)) {
    throw Error(ErrorCategory::Domain, "truncation radius must be finite and > 0");
  }
  if (cfg.replications < 1) throw Error(ErrorCategory::Domain, "replications must be >= 1");
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t replication, std::uint64_t tier) {
  return mix64(mix64(mix64(seed) ^ replication) + tier);
}

std::vector<double> sample_distances(const TierConfig& tier, double radius, Construction construction,
                                     RandomStream& rng) {
  if (!(radius > 0.0)) throw Error(ErrorCategory::Domain, "truncation radius must be > 0");
  std::vector<double> out;
  const RadialInverse inverse(tier);
  for_each_arrival(tier_measure(tier, radius), construction, rng,
                   [&](double v) { out.push_back(std::min(inverse(v), radius)); });
  return out;
}

double tier_interference(const TierConfig& tier, std::span<const double> distances, RandomStream& rng) {
  FadingSampler fading(tier.fading);
  double acc = 0.0;
  for (double t : distances) acc += fading(rng) * path_loss_eval(tier.pathloss, t);
  return tier.power * acc;
}

double interference_realization(const Scenario& s, const SimConfig& cfg, RandomStream& rng) {
  require_valid_tiers(s);
  check_config(cfg);
  double total = 0.0;
  for (auto& sim : make_simulators(s)) total += sim.draw(cfg.radius, cfg.construction, rng);
  return total;
}

double interference_replication(const Scenario& s, const SimConfig& cfg, std::uint64_t replication) {
  require_valid_tiers(s);
  check_config(cfg);
  auto sims = make_simulators(s);
  return replicate(sims, cfg, replication);
}

SampleSet monte_carlo(const Scenario& s, const SimConfig& cfg) {
  require_valid(s);
  check_config(cfg);

  SampleSet out;
  out.config = cfg;
  out.fingerprint = scenario_fingerprint(s, cfg.seed);
  out.values.assign(cfg.replications, 0.0);

  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.replications));

  constexpr std::size_t kChunk = 16;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    auto sims = make_simulators(s);
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= cfg.replications) return;
      const std::size_t end = std::min(begin + kChunk, cfg.replications);
      for (std::size_t i = begin; i < end; ++i) out.values[i] = replicate(sims, cfg, i);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

SampleStats sample_stats(std::span<const double> values) {
  SampleStats st;
  if (values.empty()) return st;
  double sum = 0.0;
  for (double v : values) sum += v;
  st.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return st;
  double ss = 0.0;
  for (double v : values) ss += (v - st.mean) * (v - st.mean);
  st.variance = ss / static_cast<double>(values.size() - 1);
  return st;
}

std::vector<double> standardize(const SampleSet& samples, const Scenario& s, Standardization mode) {
  if (samples.values.empty()) throw Error(ErrorCategory::Domain, "cannot standardize an empty sample set");
  double mean = 0.0;
  double variance = 0.0;
  switch (mode) {
    case Standardization::Analytic:
      mean = campbell_mean(s);
      variance = campbell_variance(s);
      break;
    case Standardization::Windowed:
      mean = campbell_mean(s, samples.config.radius);
      variance = campbell_variance(s, samples.config.radius);
      break;
    case Standardization::Empirical: {
      const auto st = sample_stats(samples.values);
      mean = st.mean;
      variance = st.variance;
      break;
    }
  }
  if (!(variance > 0.0)) throw Error(ErrorCategory::Degenerate, "zero variance; standardization undefined");
  const double sd = std::sqrt(variance);
  std::vector<double> out;
  out.reserve(samples.values.size());
  for (double v : samples.values) out.push_back((v - mean) / sd);
  return out;
}

}  // namespace hcn
