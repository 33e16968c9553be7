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

#pragma once

#include <cstddef>
#include <functional>

namespace curvelace::numerics {

using ScalarFn = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  // Accepted when the global error estimate is below max(abs_tol, rel_tol*|I|).
  double rel_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

// Adaptive Gauss-Kronrod (7/15) quadrature with interval halving. Throws Error(kNumerical, "quadrature budget exceeded") when the evaluation
// budget runs out before the tolerance is met.
QuadratureResult integrate(const ScalarFn& f, double a, double b,
                           const QuadratureOptions& options);
QuadratureResult integrate(const ScalarFn& f, double a, double b,
                           double tol = 1e-10);

// TOMS 748 on a sign-changing bracket. Terminates when the bracket is
// narrower than tol or an exact zero is hit.
double find_root(const ScalarFn& f, double lo, double hi, double tol = 1e-12);

// Brent's method for the minimum of a unimodal function; x is resolved to
// about sqrt(machine epsilon) at best.
double minimize_scalar(const ScalarFn& f, double lo, double hi,
                       double tol = 1e-10);

inline constexpr double kFirstDerivativeStep = 1e-6;
inline constexpr double kSecondDerivativeStep = 1e-4;

// Central finite difference of order 1 or 2.
double differentiate(const ScalarFn& f, double x, int order, double step);
double differentiate(const ScalarFn& f, double x, int order);

}  // namespace curvelace::numerics
