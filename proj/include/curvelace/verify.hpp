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

#include <string>
#include <vector>

namespace curvelace {

// Published stitch counts for an order-2 Enneper surface at W = 0.5 cm.
struct ReferenceColumn {
  double height;
  std::vector<int> stitches;  // N for rounds 1, 2, ...
  long printed_total;
};

const std::vector<ReferenceColumn>& enneper_reference_columns();

struct ScaleFit {
  double scale = 0.0;
  long abs_error = 0;  // sum over rounds of |N_model - N_reference|
  std::vector<int> model;
};

// Brute-force scan of scale over [lo, hi] in `step` increments; the first
// minimum wins.
ScaleFit fit_enneper_scale(const ReferenceColumn& column, double width = 0.5,
                           double lo = 1.5, double hi = 2.6, double step = 0.005);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int failures() const;
  std::string to_text() const;
};

// Cross-checks closed forms against quadrature of the raw parametrizations,
// curvature, isometry, the reference table fit and the knot arithmetic.
VerifyReport run_verification();

}  // namespace curvelace
