// Copyright 2026 The Curvelace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "curvelace/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "curvelace/error.hpp"
#include "curvelace/knots.hpp"
#include "curvelace/numerics.hpp"
#include "curvelace/pattern.hpp"
#include "curvelace/surfaces.hpp"

namespace curvelace {
namespace {

using std::numbers::pi;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Fourth-order finite difference of the raw parametrization; independent of
// the hand-written tangents used by the library. Radial stencils turn
// one-sided at the edges of the domain.
constexpr double kFdStep = 1e-3;

double speed_fd(const SurfaceSpec& spec, double r, double t, bool along_r) {
  constexpr double h = kFdStep;
  const auto at = [&](double s) {
    return along_r ? point(spec, r + s, t) : point(spec, r, t + s);
  };
  std::array<double, 5> offsets{-2, -1, 0, 1, 2};
  std::array<double, 5> weights{1, -8, 0, 8, -1};
  if (along_r) {
    const ParamInterval d = radial_domain(spec);
    if (r - 2 * h < d.lo) {
      offsets = {0, 1, 2, 3, 4};
      weights = {-25, 48, -36, 16, -3};
    } else if (r + 2 * h > d.hi) {
      offsets = {0, -1, -2, -3, -4};
      weights = {25, -48, 36, -16, 3};
    }
  }
  double x = 0.0, y = 0.0, z = 0.0;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const SurfacePoint p = at(offsets[k] * h);
    x += weights[k] * p.x;
    y += weights[k] * p.y;
    z += weights[k] * p.z;
  }
  return std::sqrt(x * x + y * y + z * z) / (12 * h);
}

numerics::QuadratureOptions oracle_quadrature() {
  numerics::QuadratureOptions o;
  o.abs_tol = 1e-10;
  o.rel_tol = 1e-10;
  return o;
}

double circumference_oracle(const SurfaceSpec& spec, double r) {
  return numerics::integrate([&](double t) { return speed_fd(spec, r, t, false); },
                             0.0, theta_period(spec), oracle_quadrature()).value;
}

// Split at the stencil switches, where the oracle integrand jumps slightly.
double radial_oracle(const SurfaceSpec& spec, double r0, double r1, double t) {
  const ParamInterval d = radial_domain(spec);
  std::vector<double> cuts{r0};
  for (double c : {d.lo + 2 * kFdStep, d.hi - 2 * kFdStep})
    if (c > r0 && c < r1) cuts.push_back(c);
  cuts.push_back(r1);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += numerics::integrate([&](double r) { return speed_fd(spec, r, t, true); },
                                 cuts[i], cuts[i + 1], oracle_quadrature()).value;
  return total;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

CheckResult check(const std::string& name, const std::function<std::string(bool&)>& body) {
  CheckResult result{name, true, ""};
  try {
    result.detail = body(result.passed);
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  return result;
}

}  // namespace

const std::vector<ReferenceColumn>& enneper_reference_columns() {
  static const std::vector<ReferenceColumn> columns = {
      {0.4, {5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180}, 1512},
      {0.45, {6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192}, 1525},
      {0.5, {6, 14, 23, 33, 44, 56, 69, 82, 96, 110, 124, 139, 154, 169, 184, 200}, 1504},
  };
  return columns;
}

ScaleFit fit_enneper_scale(const ReferenceColumn& column, double width, double lo,
                           double hi, double step) {
  ScaleFit best;
  best.abs_error = -1;
  const Gauge gauge{width, column.height};
  CompileOptions options;
  options.rounds = static_cast<int>(column.stitches.size());
  const int steps = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double scale = lo + i * step;
    const Pattern p = compile({family::Enneper{2}, scale}, gauge, options);
    long err = 0;
    std::vector<int> model;
    for (std::size_t k = 0; k < column.stitches.size(); ++k) {
      model.push_back(p.rounds[k].stitches);
      err += std::abs(model.back() - column.stitches[k]);
    }
    if (best.abs_error < 0 || err < best.abs_error) best = {scale, err, std::move(model)};
  }
  return best;
}

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return !c.passed; }));
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  out << (failures() == 0 ? "all checks passed" : std::to_string(failures()) + " check(s) failed")
      << "\n";
  return out.str();
}

VerifyReport run_verification() {
  VerifyReport report;

  report.checks.push_back(check("enneper profiles vs quadrature", [](bool& ok) {
    double worst = 0.0;
    for (int n : {2, 3, 6}) {
      const SurfaceSpec spec{family::Enneper{n}};
      for (int i = 0; i < 20; ++i) {
        const double r = 0.1 + 2.4 * i / 19.0;
        worst = std::max(worst, rel_err(circumference(spec, r), circumference_oracle(spec, r)));
        worst = std::max(worst, rel_err(radial_arclength(spec, 0.0, r),
                                        radial_oracle(spec, 0.0, r, 0.3)));
      }
    }
    ok = worst <= 1e-8;
    return "max relative error " + num(worst);
  }));

  report.checks.push_back(check("richmond and bour profiles vs quadrature", [](bool& ok) {
    double worst = 0.0;
    for (int n : {1, 2}) {
      const SurfaceSpec spec{family::Richmond{n, 0.3, 2.0}};
      for (double r : {0.3, 0.5, 0.76, 1.2, 2.0}) {
        worst = std::max(worst, rel_err(circumference(spec, r), circumference_oracle(spec, r)));
        worst = std::max(worst, rel_err(radial_arclength(spec, 0.3, r) + 1.0,
                                        radial_oracle(spec, 0.3, r, 0.7) + 1.0));
      }
    }
    const SurfaceSpec bour{family::Bour{1.0}};
    for (double r : {0.1, 0.4, 0.7, 0.99}) {
      worst = std::max(worst, rel_err(circumference(bour, r), circumference_oracle(bour, r)));
      worst = std::max(worst, rel_err(radial_arclength(bour, 0.05, r),
                                      radial_oracle(bour, 0.05, r, 0.9)));
    }
    ok = worst <= 1e-8;
    return "max relative error " + num(worst);
  }));

  report.checks.push_back(check("minimal surfaces: H = 0, K <= 0", [](bool& ok) {
    const std::vector<std::pair<SurfaceSpec, std::pair<double, double>>> cases = {
        {{family::Enneper{2}}, {0.1, 1.2}},
        {{family::Enneper{3}}, {0.1, 1.2}},
        {{family::Richmond{1, 0.3, 2.0}}, {0.35, 1.8}},
        {{family::Bour{1.0}}, {0.1, 0.95}},
        {{family::Catenoid{1.0, 2.0}}, {-1.8, 1.8}},
        {{family::Helicoid{1.0, 1, 2.0}}, {0.1, 1.8}},
    };
    double worst_ratio = 0.0;
    double worst_k = -1e300;
    for (const auto& [spec, range] : cases) {
      const double period = theta_period(spec);
      for (int i = 0; i < 10; ++i) {
        const double r = range.first + (range.second - range.first) * i / 9.0;
        for (int j = 0; j < 10; ++j) {
          const Curvature c = curvature(spec, r, period * (j + 0.37) / 10.0);
          const double kmax = std::max(std::abs(c.kappa1), std::abs(c.kappa2));
          worst_ratio = std::max(worst_ratio, std::abs(c.mean) / kmax);
          worst_k = std::max(worst_k, c.gaussian);
        }
      }
    }
    ok = worst_ratio <= 1e-3 && worst_k <= 1e-6;
    return "max |H|/max|k| " + num(worst_ratio) + ", max K " + num(worst_k);
  }));

  report.checks.push_back(check("sphere curvature", [](bool& ok) {
    const SurfaceSpec spec{family::Sphere{2.0}};
    double worst = 0.0;
    for (double r : {0.3, 1.0, 2.5, 5.5})
      for (double t : {0.2, 2.0, 4.4})
        worst = std::max(worst, rel_err(gaussian_curvature(spec, r, t), 0.25));
    ok = worst <= 1e-4;
    return "max relative error of K " + num(worst);
  }));

  report.checks.push_back(check("catenoid-helicoid isometry", [](bool& ok) {
    const SurfaceSpec cat{family::Catenoid{1.0, 3.0}};
    const SurfaceSpec hel{family::Helicoid{1.0, 1, 3.0}};
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
      const double r = 3.0 * i / 29.0;
      const double row = circumference(hel, r);
      const double round = circumference(cat, invert_radius(cat, r));
      worst = std::max(worst, std::abs(row - round));
      worst = std::max(worst, std::abs(row - 2.0 * pi * std::hypot(r, 1.0)));
    }
    ok = worst <= 1e-10;
    return "max difference " + num(worst) + " cm";
  }));

  for (const ReferenceColumn& column : enneper_reference_columns()) {
    char name[64];
    std::snprintf(name, sizeof name, "reference table fit, H=%.2f", column.height);
    report.checks.push_back(check(name, [&](bool& ok) {
      const ScaleFit fit = fit_enneper_scale(column);
      int within1 = 0;
      int worst = 0;
      long total = 0;
      for (std::size_t k = 0; k < fit.model.size(); ++k) {
        const int diff = std::abs(fit.model[k] - column.stitches[k]);
        within1 += diff <= 1;
        worst = std::max(worst, diff);
        total += fit.model[k];
      }
      const double share = static_cast<double>(within1) / fit.model.size();
      const double total_err = std::abs(total - column.printed_total) /
                               static_cast<double>(column.printed_total);
      ok = share >= 0.8 && worst <= 3 && total_err <= 0.015;
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "scale %.3f, %.0f%% within 1 stitch, worst %d, total %ld vs %ld",
                    fit.scale, 100.0 * share, worst, total, column.printed_total);
      return std::string(buf);
    }));
  }

  report.checks.push_back(check("disc rule", [](bool& ok) {
    const Pattern p = compile({family::Disc{}}, {0.5, 0.5}, {.rounds = 50, .stop_radius = std::nullopt});
    bool all_six_or_seven = true;
    for (std::size_t k = 1; k < p.rounds.size(); ++k)
      all_six_or_seven &= p.rounds[k].delta == 6 || p.rounds[k].delta == 7;
    const double mean = (p.rounds.back().stitches - p.rounds.front().stitches) / 49.0;
    ok = all_six_or_seven && std::abs(mean - 2.0 * pi) <= 0.05;
    return "mean added stitches " + num(mean);
  }));

  report.checks.push_back(check("sphere palindrome", [](bool& ok) {
    const Pattern p = compile({family::Sphere{4.0}}, {0.5, 0.5});
    std::vector<int> counts;
    for (const RoundPlan& r : p.rounds) counts.push_back(r.stitches);
    const int peak = *std::max_element(counts.begin(), counts.end());
    ok = std::equal(counts.begin(), counts.end(), counts.rbegin()) && peak == 50;
    return std::to_string(counts.size()) + " rounds, peak " + std::to_string(peak);
  }));

  report.checks.push_back(check("moebius boundary length", [](bool& ok) {
    const SurfaceSpec spec{family::MobiusRuled{0.8}};
    double worst = 0.0;
    for (double w : {0.1, 0.4, 0.8})
      worst = std::max(worst, std::abs(moebius_boundary_two_halves(spec, w) -
                                       circumference(spec, w)));
    ok = worst <= 1e-10;
    return "max difference " + num(worst) + " cm";
  }));

  report.checks.push_back(check("knot arithmetic", [](bool& ok) {
    const KnotTable table = KnotTable::builtin();
    const double rope = ropelength(30.48, 1.27);
    const double tube = min_tube_length(table.at("3_1"), 0.8);
    const double figure8 = recommended_length(table.at("4_1"), 0.8);
    ok = std::abs(rope - 24.0) <= 1e-12 && std::abs(tube - 13.096) <= 1e-9 &&
         std::abs(figure8 - (2.0 * tube + 10.0)) <= 1e-9;
    return "ropelength " + num(rope) + ", trefoil tube " + num(tube) +
           " cm, 4_1 recommended " + num(figure8) + " cm";
  }));

  return report;
}

}  // namespace curvelace
