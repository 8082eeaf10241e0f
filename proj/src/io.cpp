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

#include "hcngauss/io.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include <openssl/evp.h>

#include "hcngauss/errors.hpp"

namespace hcn {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCategory::Parse, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + "." + key, "missing field");
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const auto& v = field(obj, key, where);
  if (!v.is_number()) parse_fail(where + "." + key, "expected a number");
  return v.get<double>();
}

std::string family(const json& obj, const std::string& where) {
  const auto& v = field(obj, "family", where);
  if (!v.is_string()) parse_fail(where + ".family", "expected a string");
  return v.get<std::string>();
}

const char* family_name(PathLossFamily f) {
  switch (f) {
    case PathLossFamily::InverseOnePlusPower: return "InverseOnePlusPower";
    case PathLossFamily::MinOneInversePower: return "MinOneInversePower";
    case PathLossFamily::ShiftedInversePower: return "ShiftedInversePower";
  }
  return "";
}

json power_json(const PowerRadial& r) { return {{"c", r.c}, {"p", r.p}}; }

json intensity_json(const RadialIntensity& intensity) {
  return std::visit(Overloaded{
                        [](const Homogeneous2D&) { return json{{"family", "Homogeneous2D"}}; },
                        [](const PowerRadial& r) {
                          auto j = power_json(r);
                          j["family"] = "PowerRadial";
                          return j;
                        },
                        [](const PiecewiseTable& t) {
                          json knots = json::array();
                          for (const auto& k : t.knots) knots.push_back(json::array({k.t, k.mu}));
                          json j{{"family", "PiecewiseTable"}, {"knots", knots}};
                          if (t.tail) j["tail"] = power_json(*t.tail);
                          return j;
                        },
                    },
                    intensity);
}

json fading_json(const FadingModel& fading) {
  return std::visit(Overloaded{
                        [](const DeterministicFading& f) { return json{{"family", "Deterministic"}, {"gain", f.gain}}; },
                        [](const RayleighFading& f) {
                          return json{{"family", "RayleighPower"}, {"mean_power", f.mean_power}};
                        },
                        [](const NakagamiFading& f) {
                          return json{{"family", "NakagamiPower"}, {"m", f.m}, {"mean_power", f.mean_power}};
                        },
                        [](const RicianFading& f) {
                          return json{{"family", "RicianPower"}, {"k_factor", f.k_factor}, {"mean_power", f.mean_power}};
                        },
                    },
                    fading);
}

PowerRadial power_from_json(const json& j, const std::string& where) {
  return {number(j, "c", where), number(j, "p", where)};
}

RadialIntensity intensity_from_json(const json& j, const std::string& where) {
  const auto name = family(j, where);
  if (name == "Homogeneous2D") return Homogeneous2D{};
  if (name == "PowerRadial") return power_from_json(j, where);
  if (name == "PiecewiseTable") {
    PiecewiseTable table;
    const auto& knots = field(j, "knots", where);
    if (!knots.is_array()) parse_fail(where + ".knots", "expected an array of [t, mu] pairs");
    for (std::size_t i = 0; i < knots.size(); ++i) {
      const auto& k = knots[i];
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
        parse_fail(where + ".knots[" + std::to_string(i) + "]", "expected [t, mu]");
      }
      table.knots.push_back({k[0].get<double>(), k[1].get<double>()});
    }
    if (j.contains("tail")) table.tail = power_from_json(j["tail"], where + ".tail");
    return table;
  }
  parse_fail(where + ".family", "unknown intensity family '" + name + "'");
}

PathLossModel pathloss_from_json(const json& j, const std::string& where) {
  const auto name = family(j, where);
  PathLossModel g;
  if (name == "InverseOnePlusPower") {
    g.family = PathLossFamily::InverseOnePlusPower;
  } else if (name == "MinOneInversePower") {
    g.family = PathLossFamily::MinOneInversePower;
  } else if (name == "ShiftedInversePower") {
    g.family = PathLossFamily::ShiftedInversePower;
  } else {
    parse_fail(where + ".family", "unknown path-loss family '" + name + "'");
  }
  g.alpha = number(j, "alpha", where);
  return g;
}

FadingModel fading_from_json(const json& j, const std::string& where) {
  const auto name = family(j, where);
  if (name == "Deterministic") return DeterministicFading{number(j, "gain", where)};
  if (name == "RayleighPower") return RayleighFading{number(j, "mean_power", where)};
  if (name == "NakagamiPower") return NakagamiFading{number(j, "m", where), number(j, "mean_power", where)};
  if (name == "RicianPower") return RicianFading{number(j, "k_factor", where), number(j, "mean_power", where)};
  parse_fail(where + ".family", "unknown fading family '" + name + "'");
}

std::vector<double> preset_args(const std::string& text, const std::string& name) {
  static const std::regex number_re(R"(\s*([-+0-9.eE]+)\s*)");
  std::vector<double> args;
  const auto open = text.find('(');
  if (open == std::string::npos) return args;
  if (text.back() != ')') parse_fail("preset", "expected '" + name + "(...)'");
  std::stringstream body(text.substr(open + 1, text.size() - open - 2));
  std::string piece;
  while (std::getline(body, piece, ',')) {
    std::smatch m;
    if (!std::regex_match(piece, m, number_re)) parse_fail("preset " + name, "bad argument '" + piece + "'");
    try {
      args.push_back(std::stod(m[1].str()));
    } catch (const std::exception&) {
      parse_fail("preset " + name, "bad argument '" + piece + "'");
    }
  }
  return args;
}

}  // namespace

json scenario_to_json(const Scenario& s) {
  json tiers = json::array();
  for (const auto& tier : s.tiers) {
    tiers.push_back({
        {"power", tier.power},
        {"lambda", tier.lambda},
        {"intensity", intensity_json(tier.intensity)},
        {"pathloss", {{"family", family_name(tier.pathloss.family)}, {"alpha", tier.pathloss.alpha}}},
        {"fading", fading_json(tier.fading)},
    });
  }
  return {{"tiers", tiers}};
}

Scenario scenario_from_json(const json& j) {
  const auto& tiers = field(j, "tiers", "scenario");
  if (!tiers.is_array()) parse_fail("scenario.tiers", "expected an array");
  Scenario s;
  for (std::size_t k = 0; k < tiers.size(); ++k) {
    const std::string where = "tiers[" + std::to_string(k) + "]";
    const auto& t = tiers[k];
    TierConfig tier;
    tier.power = number(t, "power", where);
    tier.lambda = number(t, "lambda", where);
    tier.intensity = intensity_from_json(field(t, "intensity", where), where + ".intensity");
    tier.pathloss = pathloss_from_json(field(t, "pathloss", where), where + ".pathloss");
    tier.fading = fading_from_json(field(t, "fading", where), where + ".fading");
    s.tiers.push_back(std::move(tier));
  }
  return s;
}

std::string canonical_scenario(const Scenario& s) { return scenario_to_json(s).dump(); }

std::string scenario_fingerprint(const Scenario& s, std::uint64_t seed) {
  const std::string text = canonical_scenario(s) + "\nseed=" + std::to_string(seed);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCategory::Io, "SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < 8 && i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

Scenario figure1_preset(double kappa, double alpha) {
  const PathLossModel g{PathLossFamily::InverseOnePlusPower, alpha};
  Scenario s;
  s.tiers.push_back({4.0, 0.1 * kappa, Homogeneous2D{}, g, RayleighFading{1.0}});
  s.tiers.push_back({1.0, kappa, Homogeneous2D{}, g, RayleighFading{1.0}});
  s.tiers.push_back({0.25, 5.0 * kappa, Homogeneous2D{}, g, RayleighFading{1.0}});
  return s;
}

Scenario single_preset(double lambda, double power, double alpha) {
  Scenario s;
  s.tiers.push_back(
      {power, lambda, Homogeneous2D{}, PathLossModel{PathLossFamily::InverseOnePlusPower, alpha}, RayleighFading{1.0}});
  return s;
}

Scenario load_scenario(std::string_view path_or_preset) {
  const std::string text(path_or_preset);
  const std::string name = text.substr(0, text.find('('));
  Scenario s;
  if (name == "figure1") {
    const auto args = preset_args(text, name);
    if (!args.empty() && args.size() != 2) parse_fail("preset figure1", "expected figure1(kappa, alpha)");
    s = args.empty() ? figure1_preset(1.0, 4.0) : figure1_preset(args[0], args[1]);
  } else if (name == "single") {
    const auto args = preset_args(text, name);
    if (!args.empty() && args.size() != 3) parse_fail("preset single", "expected single(lambda, P, alpha)");
    s = args.empty() ? single_preset(1.0, 1.0, 4.0) : single_preset(args[0], args[1], args[2]);
  } else {
    std::ifstream in(text);
    if (!in) throw Error(ErrorCategory::Io, "cannot open scenario file '" + text + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      parse_fail(text, e.what());
    }
    s = scenario_from_json(j);
  }
  require_valid(s);
  return s;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace hcn
