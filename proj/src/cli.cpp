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

#include "hcngauss/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hcngauss/analytics.hpp"
#include "hcngauss/empirics.hpp"
#include "hcngauss/errors.hpp"
#include "hcngauss/io.hpp"

namespace hcn::cli {

using nlohmann::json;

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::string& comment, std::initializer_list<const char*> columns)
      : out_(path, std::ios::binary) {
    if (!out_) throw Error(ErrorCategory::Io, "cannot write '" + path.string() + "'");
    out_ << "# " << comment << '\n';
    bool first = true;
    for (const char* c : columns) {
      out_ << (first ? "" : ",") << c;
      first = false;
    }
    out_ << '\n';
  }

  // NaN renders as an empty cell.
  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      out_ << (first ? "" : ",");
      if (!std::isnan(v)) out_ << format_number(v);
      first = false;
    }
    out_ << '\n';
  }

 private:
  std::ofstream out_;
};

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCategory::Io, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

std::string header(const RunManifest& m) {
  std::ostringstream h;
  h << "fingerprint=" << m.fingerprint() << " subcommand=" << to_string(m.subcommand);
  return h.str();
}

std::filesystem::path output(RunManifest& m, const char* name) {
  auto path = m.out_dir / name;
  m.outputs.push_back(path);
  return path;
}

void write_curve(RunManifest& m, const GaussianBound& bound, const std::vector<double>* sorted) {
  CsvFile csv(output(m, sorted ? "curve.csv" : "envelope.csv"), header(m),
              {"x", "psi", "lower_unclamped", "upper_unclamped", "lower", "upper", "empirical"});
  for (std::size_t i = 0; i < m.grid.points; ++i) {
    const auto p = cdf_envelope(bound, m.grid.at(i));
    const double empirical = sorted ? empirical_cdf(*sorted, p.x) : NAN;
    csv.row({p.x, p.psi, p.lower_unclamped, p.upper_unclamped, p.lower, p.upper, empirical});
  }
}

double tail_mean(const RunManifest& m) {
  return campbell_mean(m.scenario) - campbell_mean(m.scenario, m.sim.radius);
}

json run_bound(RunManifest& m) {
  const auto bound = xi_coefficient(m.scenario);
  write_curve(m, bound, nullptr);
  json j{
      {"fingerprint", m.fingerprint()},
      {"xi", bound.xi},
      {"mean", bound.mean},
      {"variance", bound.variance},
      {"lemma2_lower_bound", lemma2_lower_bound(m.scenario)},
      {"bound_uniform", bound.xi * kUniformBerryEsseen},
      {"crossover", envelope_crossover()},
  };
  write_json(output(m, "bound.json"), j);
  return j;
}

SampleSet simulate_samples(RunManifest& m) {
  auto samples = monte_carlo(m.scenario, m.sim);
  std::ostringstream comment;
  comment << header(m) << " construction=" << to_string(m.sim.construction)
          << " radius=" << format_number(m.sim.radius) << " seed=" << m.sim.seed
          << " replications=" << m.sim.replications;
  CsvFile csv(output(m, "samples.csv"), comment.str(), {"interference"});
  for (double v : samples.values) csv.row({v});
  return samples;
}

json run_simulate(RunManifest& m) {
  const auto samples = simulate_samples(m);
  const auto st = sample_stats(samples.values);
  return {
      {"fingerprint", m.fingerprint()},
      {"replications", samples.values.size()},
      {"sample_mean", st.mean},
      {"sample_variance", st.variance},
      {"campbell_mean", campbell_mean(m.scenario)},
      {"campbell_variance", campbell_variance(m.scenario)},
      {"truncated_tail_mean", tail_mean(m)},
  };
}

json run_compare(RunManifest& m) {
  const auto samples = simulate_samples(m);
  const auto z = standardize(samples, m.scenario, m.standardization);
  const double radius = m.standardization == Standardization::Windowed ? m.sim.radius : kInfiniteRadius;
  const auto bound = xi_coefficient(m.scenario, radius);
  const auto report = envelope_report(z, bound, m.slack_level);
  write_curve(m, bound, &report.sorted);
  json j{
      {"fingerprint", m.fingerprint()},
      {"standardization", to_string(m.standardization)},
      {"radius", m.sim.radius},
      {"replications", samples.values.size()},
      {"ks_distance", report.ks_distance},
      {"xi", report.xi},
      {"bound_uniform", report.bound_uniform},
      {"slack_level", report.slack_level},
      {"slack", report.slack},
      {"envelope_violations", report.envelope_violations},
      {"worst_excess", report.worst_excess},
      {"crossover", envelope_crossover()},
      {"truncated_tail_mean", tail_mean(m)},
  };
  write_json(output(m, "report.json"), j);
  return j;
}

json run_laplace(RunManifest& m) {
  const auto samples = monte_carlo(m.scenario, m.sim);
  const auto full = laplace_transform(m.scenario, m.svals);
  const auto windowed = laplace_transform(m.scenario, m.svals, m.sim.radius);
  CsvFile csv(output(m, "laplace.csv"), header(m), {"s", "analytic", "analytic_windowed", "mc_mean", "mc_stderr", "z"});
  json rows = json::array();
  for (std::size_t i = 0; i < m.svals.size(); ++i) {
    std::vector<double> e;
    e.reserve(samples.values.size());
    for (double v : samples.values) e.push_back(std::exp(-m.svals[i] * v));
    const auto st = sample_stats(e);
    const double se = std::sqrt(st.variance / static_cast<double>(e.size()));
    const double z = se > 0.0 ? (st.mean - full[i]) / se : 0.0;
    csv.row({m.svals[i], full[i], windowed[i], st.mean, se, z});
    rows.push_back({{"s", m.svals[i]}, {"analytic", full[i]}, {"mc_mean", st.mean}, {"mc_stderr", se}, {"z", z}});
  }
  return {{"fingerprint", m.fingerprint()}, {"rows", rows}};
}

json run_scaling(RunManifest& m) {
  const auto cert = lemma1_scaling_certificate(m.scenario, m.factors, m.scaled_tiers);
  CsvFile csv(output(m, "scaling.csv"), header(m),
              {"factor", "xi", "lambda_norm", "xi_sqrt_factor", "xi_sqrt_lambda_norm"});
  for (const auto& r : cert.rows) csv.row({r.factor, r.xi, r.lambda_norm, r.xi_sqrt_factor, r.xi_sqrt_lambda_norm});
  return {
      {"fingerprint", m.fingerprint()},
      {"uniform", cert.uniform},
      {"spread_xi_sqrt_factor", cert.spread_sqrt_factor},
      {"spread_xi_sqrt_lambda_norm", cert.spread_sqrt_lambda_norm},
  };
}

json run_converge(RunManifest& m) {
  const auto rows = convergence_diagnostic(m.scenario, m.radii, m.sim);
  CsvFile csv(output(m, "converge.csv"), header(m),
              {"radius", "sample_mean", "sample_variance", "mean_stderr", "truncated_mean", "truncated_variance",
               "mean_gap", "variance_gap"});
  for (const auto& r : rows) {
    csv.row({r.radius, r.sample_mean, r.sample_variance, r.mean_standard_error, r.truncated_mean,
             r.truncated_variance, r.mean_gap, r.variance_gap});
  }
  return {{"fingerprint", m.fingerprint()},
          {"campbell_mean", campbell_mean(m.scenario)},
          {"campbell_variance", campbell_variance(m.scenario)}};
}

json manifest_json(const RunManifest& m) {
  json outputs = json::array();
  for (const auto& p : m.outputs) outputs.push_back(p.filename().string());
  return {
      {"tool", "hcn-gauss"},
      {"version", kToolVersion},
      {"subcommand", to_string(m.subcommand)},
      {"scenario_source", m.scenario_source},
      {"scenario", scenario_to_json(m.scenario)},
      {"sim",
       {{"radius", m.sim.radius},
        {"replications", m.sim.replications},
        {"seed", m.sim.seed},
        {"construction", to_string(m.sim.construction)}}},
      {"slack_level", m.slack_level},
      {"grid", {{"min", m.grid.min}, {"max", m.grid.max}, {"points", m.grid.points}}},
      {"outputs", outputs},
      {"timestamp", m.timestamp},
      {"fingerprint", m.fingerprint()},
  };
}

}  // namespace

std::string_view to_string(Subcommand c) {
  switch (c) {
    case Subcommand::Bound: return "bound";
    case Subcommand::Simulate: return "simulate";
    case Subcommand::Compare: return "compare";
    case Subcommand::Laplace: return "laplace";
    case Subcommand::Scaling: return "scaling";
    case Subcommand::Converge: return "converge";
  }
  return "";
}

std::optional<Subcommand> parse_subcommand(std::string_view name) {
  for (auto c : {Subcommand::Bound, Subcommand::Simulate, Subcommand::Compare, Subcommand::Laplace,
                 Subcommand::Scaling, Subcommand::Converge}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

double Grid::at(std::size_t i) const {
  if (points <= 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::stringstream in{std::string(text)};
  std::string piece;
  while (std::getline(in, piece, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || piece.find_first_not_of(" \t", used) != std::string::npos) {
      throw Error(ErrorCategory::Parse, "bad number '" + piece + "' in list '" + std::string(text) + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCategory::Parse, "empty list");
  return out;
}

Grid parse_grid(std::string_view text) {
  std::string s(text);
  for (auto& ch : s) {
    if (ch == ':') ch = ',';
  }
  const auto parts = parse_list(s);
  if (parts.size() != 3 || !(parts[1] > parts[0]) || parts[2] < 2 || parts[2] != std::floor(parts[2])) {
    throw Error(ErrorCategory::Parse, "grid must be MIN:MAX:POINTS with MIN < MAX and POINTS >= 2");
  }
  return {parts[0], parts[1], static_cast<std::size_t>(parts[2])};
}

Construction parse_construction(std::string_view text) {
  if (text == "poisson") return Construction::PoissonField;
  if (text == "fixed") return Construction::FixedCountIID;
  throw Error(ErrorCategory::Parse, "construction must be 'poisson' or 'fixed'");
}

std::string_view to_string(Construction c) { return c == Construction::PoissonField ? "poisson" : "fixed"; }

Standardization parse_standardization(std::string_view text) {
  if (text == "analytic") return Standardization::Analytic;
  if (text == "windowed") return Standardization::Windowed;
  if (text == "empirical") return Standardization::Empirical;
  throw Error(ErrorCategory::Parse, "standardization must be 'analytic', 'windowed' or 'empirical'");
}

std::string_view to_string(Standardization mode) {
  switch (mode) {
    case Standardization::Analytic: return "analytic";
    case Standardization::Windowed: return "windowed";
    case Standardization::Empirical: return "empirical";
  }
  return "";
}

std::string RunManifest::fingerprint() const { return scenario_fingerprint(scenario, sim.seed); }

void run(RunManifest& m, std::ostream& out) {
  require_valid(m.scenario);
  check_config(m.sim);
  if (!(m.slack_level > 0.0 && m.slack_level < 1.0)) {
    throw Error(ErrorCategory::Domain, "slack level must be in (0, 1)");
  }
  std::error_code ec;
  std::filesystem::create_directories(m.out_dir, ec);
  if (ec) throw Error(ErrorCategory::Io, "cannot create '" + m.out_dir.string() + "': " + ec.message());
  if (m.timestamp.empty()) m.timestamp = utc_now();
  m.outputs.clear();

  json summary;
  switch (m.subcommand) {
    case Subcommand::Bound: summary = run_bound(m); break;
    case Subcommand::Simulate: summary = run_simulate(m); break;
    case Subcommand::Compare: summary = run_compare(m); break;
    case Subcommand::Laplace: summary = run_laplace(m); break;
    case Subcommand::Scaling: summary = run_scaling(m); break;
    case Subcommand::Converge: summary = run_converge(m); break;
  }
  write_json(m.out_dir / "manifest.json", manifest_json(m));
  out << summary.dump(2) << '\n';
}

}  // namespace hcn::cli
