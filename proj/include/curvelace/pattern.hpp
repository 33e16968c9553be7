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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvelace/surfaces.hpp"

namespace curvelace {

// Physical stitch size in cm.
struct Gauge {
  double width = 0.5;   // W
  double height = 0.5;  // H
};

// Throws Error(kInvalidArgument) unless 0.1 <= W, H <= 5.
void validate(const Gauge& gauge);

enum class Direction { kOutward, kInward, kMirror };

enum class Construction {
  kClosedRounds,
  kMirroredSphere,
  kBidirectionalRichmond,
  kRowsHelicoid,
  kMoebiusBoundary,
};

std::string_view to_string(Direction d);
std::string_view to_string(Construction c);

// Increases list a parent once per extra child (so a parent worked three
// times appears twice). Decreases list the first parent p of each merged
// pair (p, p + 1 mod parent count); two consecutive entries p, p + 1 merge
// three parents into one child.
struct ChangeSet {
  std::vector<int> increases;
  std::vector<int> decreases;

  bool empty() const { return increases.empty() && decreases.empty(); }
};

struct RoundPlan {
  int index = 1;  // l; 0 marks a foundation chain or the start round
  Direction direction = Direction::kOutward;
  int parent = -1;         // position in Pattern::rounds this round is worked into
  int parent_passes = 1;   // 2 when a round is worked along both sides of a chain
  double param_radius = 0.0;
  double intrinsic_radius = 0.0;  // R, cm
  double circumference = 0.0;     // C, cm
  int stitches = 0;               // N
  int delta = 0;                  // N - parent N (net)
  ChangeSet changes;
  std::vector<double> theta_offsets;  // stitch boundaries for non-uniform rounds
  bool closed = true;

  // Parent positions of the changes: increases when growing, else decreases.
  const std::vector<int>& change_positions() const;
};

struct Pattern {
  SurfaceSpec surface;
  Gauge gauge;
  std::vector<RoundPlan> rounds;
  long total_stitches = 0;
  Construction construction = Construction::kClosedRounds;
  bool single_direction = false;  // Richmond start sits at a bracket edge
  std::vector<std::string> notes;
};

struct CompileOptions {
  std::optional<int> rounds;
  std::optional<double> stop_radius;  // cm
};

inline constexpr int kMinClosedStitches = 3;
inline constexpr int kMinFirstRoundStitches = 4;

// C / W rounded half-up, floored at 3 for closed rounds and 1 for open rows.
int stitch_count(double circumference, double width, bool closed = true);

// Evenly spaced changes taking prev_n parent stitches to next_n children.
// When `stacked` (child positions of the previous round's changes, in this
// round's parent indexing) is non-empty the pattern is rotated by half the
// inter-change gap away from them.
ChangeSet allocate_changes(int prev_n, int next_n,
                           std::span<const int> stacked = {});

// Arc-share allocation for non-uniform rounds: each child goes to the parent
// whose boundary interval contains the child's midpoint. Offsets are sorted
// stitch boundaries on the common cyclic range [0, period).
ChangeSet allocate_changes_by_arc(std::span<const double> parent_offsets,
                                  std::span<const double> child_offsets,
                                  double period);

// For each child, the parent position(s) it is worked into, in working order.
// Throws if the change set is inconsistent with the counts.
std::vector<std::vector<int>> child_parents(int parent_count, int child_count,
                                            const ChangeSet& changes);

// Child positions produced by the changes (the stitches a following round
// should not stack onto).
std::vector<int> changed_children(int parent_count, int child_count,
                                  const ChangeSet& changes);

std::vector<RoundPlan> plan_rounds(const SurfaceSpec& spec, const Gauge& gauge,
                                   const CompileOptions& options);
// Completes a sphere's first half (rounds 1..l_eq) with its mirror image.
std::vector<RoundPlan> mirror_sphere(const SurfaceSpec& spec, const Gauge& gauge,
                                     std::vector<RoundPlan> half);
// Number of rounds up to and including the sphere's equator.
int sphere_equator_round(const SurfaceSpec& spec, const Gauge& gauge);

Pattern plan_bidirectional(const SurfaceSpec& spec, const Gauge& gauge,
                           const CompileOptions& options = {});
Pattern plan_moebius(const SurfaceSpec& spec, const Gauge& gauge,
                     const CompileOptions& options = {});
// Length in cm of the Moebius boundary at half-width w (parameter units),
// as the sum of the two half-integrals over t in [0, pi] at +w and -w.
double moebius_boundary_two_halves(const SurfaceSpec& spec, double w);

Pattern compile(const SurfaceSpec& spec, const Gauge& gauge,
                const CompileOptions& options = {});

struct StitchNode {
  int round = 0;  // position in Pattern::rounds
  int index = 0;
  double theta = 0.0;
  std::optional<SurfacePoint> xyz;
};

struct StitchGraph {
  std::vector<StitchNode> nodes;
  std::vector<std::pair<int, int>> parent_edges;   // (child node, parent node)
  std::vector<std::pair<int, int>> lateral_edges;  // consecutive stitches
  std::vector<int> round_start;                    // first node of each round
};

StitchGraph build_stitch_graph(const Pattern& pattern);

}  // namespace curvelace
