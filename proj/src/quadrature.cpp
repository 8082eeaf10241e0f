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

#include "hcngauss/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hcngauss/errors.hpp"

namespace hcn::quadrature {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

constexpr std::size_t kMaxPanels = 4000;

// Kronrod-61 estimate with its embedded Gauss-30 rule as error reference.
Panel evaluate(const std::function<double(double)>& f, double a, double b) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
  using Gauss = boost::math::quadrature::gauss<double, 30>;
  const double k = Kronrod::integrate(f, a, b, 0);
  const double g = Gauss::integrate(f, a, b);
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * std::abs(k);
  return {a, b, k, std::max(std::abs(k - g), floor)};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breakpoints, double rel_tol) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw Error(ErrorCategory::Domain, "quadrature range must be finite");
  }
  if (b <= a) return {};

  std::vector<double> points{a, b};
  for (double p : breakpoints) {
    if (p > a && p < b) points.push_back(p);
  }
  // Decade splits keep each panel's dynamic range modest on long ranges.
  for (double p = 1.0; p < b; p *= 10.0) {
    if (p > a) points.push_back(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Global adaptive bisection: always refine the panel with the largest error.
  std::priority_queue<Panel> panels;
  Result total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto panel = evaluate(f, points[i], points[i + 1]);
    total.value += panel.value;
    total.error += panel.error;
    panels.push(panel);
  }
  while (total.error > rel_tol * std::abs(total.value) && panels.size() < kMaxPanels) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    panels.pop();
    const auto left = evaluate(f, worst.a, mid);
    const auto right = evaluate(f, mid, worst.b);
    total.value += left.value + right.value - worst.value;
    total.error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  total = {};
  for (; !panels.empty(); panels.pop()) {
    total.value += panels.top().value;
    total.error += panels.top().error;
  }
  if (!std::isfinite(total.value)) {
    throw Error(ErrorCategory::Divergence, "integral is not finite");
  }
  return total;
}

}  // namespace hcn::quadrature
