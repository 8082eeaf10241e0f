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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hcngauss/cli.hpp"
#include "hcngauss/errors.hpp"
#include "hcngauss/io.hpp"

namespace {

std::string one_line(std::string text) {
  for (std::size_t pos = 0; (pos = text.find('\n', pos)) != std::string::npos;) text.replace(pos, 1, "; ");
  return text;
}

unsigned threads_from_env() {
  const char* env = std::getenv("HCN_GAUSS_THREADS");
  if (!env || !*env) return 0;
  try {
    const long n = std::stol(env);
    return n > 0 ? static_cast<unsigned>(n) : 0;
  } catch (const std::exception&) {
    throw hcn::Error(hcn::ErrorCategory::Parse, "HCN_GAUSS_THREADS must be a positive integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian approximation bounds and Monte-Carlo checks for downlink interference in K-tier networks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string scenario_file;
  std::string preset = "figure1";
  double kappa = 1.0;
  double alpha = 4.0;
  double lambda = 1.0;
  double power = 1.0;
  std::uint64_t seed = 1;
  std::size_t replications = 10000;
  double radius = 200.0;
  std::string construction = "poisson";
  std::string out_dir = ".";
  double slack = 0.01;
  std::string grid;
  std::string svals;
  std::string factors;
  std::string scale_tiers;
  std::string radii;
  std::string standardize = "windowed";

  app.add_option("--scenario", scenario_file, "Scenario JSON file")->check(CLI::ExistingFile);
  app.add_option("--preset", preset, "figure1 | single | figure1(kappa,alpha) | single(lambda,P,alpha)");
  app.add_option("--kappa", kappa, "Density multiplier for the figure1 preset");
  app.add_option("--alpha", alpha, "Path-loss exponent for presets");
  app.add_option("--lambda", lambda, "Intensity for the single preset");
  app.add_option("--power", power, "Transmit power for the single preset");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--replications", replications, "Monte-Carlo replications");
  app.add_option("--radius", radius, "Truncation radius of the simulated disc");
  app.add_option("--construction", construction, "poisson | fixed");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--slack", slack, "DKW slack level");
  app.add_option("--grid", grid, "Envelope grid MIN:MAX:POINTS");
  app.add_option("--s", svals, "Laplace arguments, comma separated");
  app.add_option("--factors", factors, "Intensity scaling factors, comma separated");
  app.add_option("--scale-tiers", scale_tiers, "1-based tiers to scale (default: all)");
  app.add_option("--radii", radii, "Ascending radii for the convergence table");
  app.add_option("--standardize", standardize, "analytic | windowed | empirical");

  for (auto c : {hcn::cli::Subcommand::Bound, hcn::cli::Subcommand::Simulate, hcn::cli::Subcommand::Compare,
                 hcn::cli::Subcommand::Laplace, hcn::cli::Subcommand::Scaling, hcn::cli::Subcommand::Converge}) {
    app.add_subcommand(std::string(hcn::cli::to_string(c)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    hcn::cli::RunManifest m;
    m.subcommand = *hcn::cli::parse_subcommand(app.get_subcommands().front()->get_name());
    if (!scenario_file.empty()) {
      m.scenario_source = scenario_file;
      m.scenario = hcn::load_scenario(scenario_file);
    } else if (preset.find('(') != std::string::npos) {
      m.scenario_source = preset;
      m.scenario = hcn::load_scenario(preset);
    } else if (preset == "figure1") {
      m.scenario_source = "figure1(" + hcn::format_number(kappa) + "," + hcn::format_number(alpha) + ")";
      m.scenario = hcn::figure1_preset(kappa, alpha);
    } else if (preset == "single") {
      m.scenario_source = "single(" + hcn::format_number(lambda) + "," + hcn::format_number(power) + "," +
                          hcn::format_number(alpha) + ")";
      m.scenario = hcn::single_preset(lambda, power, alpha);
    } else {
      throw hcn::Error(hcn::ErrorCategory::Parse, "unknown preset '" + preset + "'");
    }
    hcn::require_valid(m.scenario);

    m.sim.seed = seed;
    m.sim.replications = replications;
    m.sim.radius = radius;
    m.sim.construction = hcn::cli::parse_construction(construction);
    m.sim.threads = threads_from_env();
    m.out_dir = out_dir;
    m.slack_level = slack;
    m.standardization = hcn::cli::parse_standardization(standardize);
    if (!grid.empty()) m.grid = hcn::cli::parse_grid(grid);
    if (!svals.empty()) m.svals = hcn::cli::parse_list(svals);
    if (!factors.empty()) m.factors = hcn::cli::parse_list(factors);
    if (!radii.empty()) m.radii = hcn::cli::parse_list(radii);
    if (!scale_tiers.empty()) {
      for (double k : hcn::cli::parse_list(scale_tiers)) {
        if (k < 1 || k > static_cast<double>(m.scenario.tiers.size()) || k != static_cast<double>(static_cast<long>(k))) {
          throw hcn::Error(hcn::ErrorCategory::Parse, "--scale-tiers entries must be tier numbers 1..K");
        }
        m.scaled_tiers.push_back(static_cast<std::size_t>(k) - 1);
      }
    }

    hcn::cli::run(m, std::cout);
    return 0;
  } catch (const hcn::Error& e) {
    std::cerr << "error category=" << hcn::to_string(e.category()) << " message=" << one_line(e.what()) << '\n';
    return hcn::exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error category=internal message=" << one_line(e.what()) << '\n';
    return 1;
  }
}
