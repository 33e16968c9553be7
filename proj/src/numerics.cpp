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

#include "curvelace/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "curvelace/error.hpp"

namespace curvelace::numerics {
namespace {

// Deep enough for endpoint singularities; the evaluation budget is the real
// limit.
constexpr unsigned kMaxDepth = 30;
constexpr double kRoundoffFloor = 64.0 * std::numeric_limits<double>::epsilon();

struct BudgetExhausted {};

}  // namespace

QuadratureResult integrate(const ScalarFn& f, double a, double b,
                           const QuadratureOptions& options) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  if (!(a <= b)) throw Error(ErrorCode::kInvalidArgument, "integrate: a > b");
  if (!(options.abs_tol > 0.0) && !(options.rel_tol > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "integrate: tolerance must be > 0");
  if (a == b) return {0.0, 0.0, 0};

  std::size_t evaluations = 0;
  const auto counted = [&](double x) {
    if (++evaluations > options.max_evaluations) throw BudgetExhausted{};
    return f(x);
  };
  try {
    // Boost stops once the error is below tolerance * L1; translate the
    // absolute/relative target using a single-panel estimate and floor it at
    // the roundoff level.
    double error = 0.0, l1 = 0.0;
    const double coarse = Rule::integrate(counted, a, b, 0, 0.0, &error, &l1);
    const double target = std::max(options.abs_tol, options.rel_tol * std::abs(coarse));
    if (error <= target || l1 == 0.0) return {coarse, error, evaluations};
    const double rel = std::max(target / l1, kRoundoffFloor);
    const double value = Rule::integrate(counted, a, b, kMaxDepth, rel, &error, &l1);
    return {value, error, evaluations};
  } catch (const BudgetExhausted&) {
    throw Error(ErrorCode::kNumerical, "quadrature budget exceeded");
  }
}

QuadratureResult integrate(const ScalarFn& f, double a, double b, double tol) {
  QuadratureOptions options;
  options.abs_tol = tol;
  return integrate(f, a, b, options);
}

double find_root(const ScalarFn& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "find_root: tol must be > 0");
  if (lo > hi) std::swap(lo, hi);
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi))
    throw Error(ErrorCode::kNumerical, "root not bracketed");

  std::uintmax_t max_iter = 200;
  const auto done = [tol](double x0, double x1) { return std::abs(x1 - x0) <= tol; };
  const auto [x0, x1] =
      boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, done, max_iter);
  return 0.5 * (x0 + x1);
}

double minimize_scalar(const ScalarFn& f, double lo, double hi, double tol) {
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "empty bracket");
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "minimize_scalar: tol must be > 0");
  // Brent's method resolves at best half the mantissa.
  const int max_bits = std::numeric_limits<double>::digits / 2;
  const int bits = std::clamp(static_cast<int>(std::ceil(1.0 - std::log2(tol))), 4, max_bits);
  const auto [x, fx] = boost::math::tools::brent_find_minima(f, lo, hi, bits);
  // Brent never evaluates the bracket ends, so check them for boundary minima.
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo <= fx && flo <= fhi) return lo;
  if (fhi <= fx) return hi;
  return x;
}

double differentiate(const ScalarFn& f, double x, int order, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "differentiate: step must be > 0");
  switch (order) {
    case 1:
      return (f(x + step) - f(x - step)) / (2.0 * step);
    case 2:
      return (f(x + step) - 2.0 * f(x) + f(x - step)) / (step * step);
    default:
      throw Error(ErrorCode::kInvalidArgument, "differentiate: order must be 1 or 2");
  }
}

double differentiate(const ScalarFn& f, double x, int order) {
  return differentiate(f, x, order,
                       order == 2 ? kSecondDerivativeStep : kFirstDerivativeStep);
}

}  // namespace curvelace::numerics
