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

#include <optional>
#include <string>

#include "curvelace/pattern.hpp"
#include "curvelace/surfaces.hpp"

namespace curvelace {

struct MeshSampling {
  int r_samples = 50;
  int theta_samples = 100;
  std::optional<double> r_lo;  // parameter units; default is the family's range
  std::optional<double> r_hi;
};

// Human-readable instructions, one line per round.
std::string render_text(const Pattern& pattern);
// "l,delta_N,N" rows plus a final total row.
std::string render_csv(const Pattern& pattern);
// Stable key order, reals rounded to 6 decimals.
std::string render_json(const Pattern& pattern);

// Text body of one round, e.g. "(2 sc, inc) ×6". Exposed for tests.
std::string encode_round_body(const Pattern& pattern, int position);

// ASCII Wavefront OBJ of the sampled parameter grid, triangulated.
std::string export_obj(const SurfaceSpec& spec, const MeshSampling& sampling);
std::string export_graph(const StitchGraph& graph);

}  // namespace curvelace
