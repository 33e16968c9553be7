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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "curvelace/error.hpp"

namespace curvelace::numerics {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kIo;
}

TEST(Integrate, SmoothIntegrands) {
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value,
              2.0, 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 1.0).value,
              std::numbers::e - 1.0, 1e-12);
}

TEST(Integrate, EndpointSingularity) {
  const auto r = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-11);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-10);
  EXPECT_GT(r.evaluations, 15);
}

TEST(Integrate, EmptyAndReversedIntervals) {
  const auto f = [](double x) { return x * x; };
  EXPECT_EQ(integrate(f, 2.0, 2.0).value, 0.0);
  EXPECT_EQ(code_of([&] { integrate(f, 1.0, 0.0); }), ErrorCode::kInvalidArgument);
}

TEST(Integrate, BudgetExceeded) {
  QuadratureOptions o;
  o.abs_tol = 1e-15;
  o.max_evaluations = 200;
  EXPECT_EQ(code_of([&] {
              integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0, o);
            }),
            ErrorCode::kNumerical);
}

TEST(FindRoot, Bracketed) {
  EXPECT_NEAR(find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0),
              0.7390851332151607, 1e-12);
  EXPECT_NEAR(find_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0),
              std::cbrt(2.0), 1e-12);
}

TEST(FindRoot, NotBracketed) {
  EXPECT_EQ(code_of([] { find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0); }),
            ErrorCode::kNumerical);
}

TEST(Minimize, Parabola) {
  EXPECT_NEAR(minimize_scalar([](double x) { return (x - 2.0) * (x - 2.0); }, 0.0, 5.0),
              2.0, 1e-7);
}

TEST(Minimize, EmptyBracket) {
  EXPECT_EQ(code_of([] { minimize_scalar([](double x) { return x; }, 1.0, 1.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(Differentiate, FirstAndSecondOrder) {
  const auto f = [](double x) { return std::sin(x); };
  EXPECT_NEAR(differentiate(f, 1.0, 1), std::cos(1.0), 1e-8);
  EXPECT_NEAR(differentiate(f, 1.0, 2), -std::sin(1.0), 1e-5);
}

}  // namespace
}  // namespace curvelace::numerics
