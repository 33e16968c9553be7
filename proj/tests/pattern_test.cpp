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

#include "curvelace/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "curvelace/error.hpp"
#include "properties.hpp"

namespace curvelace {
namespace {

constexpr double pi = std::numbers::pi;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kIo;
}

std::vector<int> counts(const Pattern& p) {
  std::vector<int> out;
  for (const RoundPlan& r : p.rounds) out.push_back(r.stitches);
  return out;
}

CompileOptions rounds(int n) {
  CompileOptions o;
  o.rounds = n;
  return o;
}

TEST(StitchCount, RoundsHalfUpWithFloor) {
  EXPECT_EQ(stitch_count(2 * pi, 0.5), 13);
  EXPECT_EQ(stitch_count(7.25, 0.5), 15);
  EXPECT_EQ(stitch_count(2.746, 0.5), 5);
  EXPECT_EQ(stitch_count(0.2, 0.5), kMinClosedStitches);
  EXPECT_EQ(stitch_count(0.2, 0.5, false), 1);
}

TEST(Gauge, Validation) {
  EXPECT_EQ(code_of([] { validate(Gauge{0.0, 1.0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { validate(Gauge{0.5, 6.0}); }), ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(validate(Gauge{0.1, 5.0}));
}

TEST(AllocateChanges, EvenIncreases) {
  const ChangeSet c = allocate_changes(12, 18);
  EXPECT_EQ(c.increases, (std::vector<int>{0, 2, 4, 6, 8, 10}));
  EXPECT_TRUE(c.decreases.empty());
}

TEST(AllocateChanges, UnevenGapsDifferByOne) {
  const ChangeSet c = allocate_changes(14, 23);
  ASSERT_EQ(c.increases.size(), 9u);
  std::set<int> gaps;
  for (std::size_t i = 0; i < c.increases.size(); ++i) {
    const int next = i + 1 < c.increases.size() ? c.increases[i + 1] : c.increases[0] + 14;
    gaps.insert(next - c.increases[i]);
  }
  EXPECT_EQ(gaps, (std::set<int>{1, 2}));
}

TEST(AllocateChanges, Decreases) {
  const ChangeSet c = allocate_changes(18, 12);
  EXPECT_EQ(c.decreases, (std::vector<int>{0, 3, 6, 9, 12, 15}));
  EXPECT_TRUE(c.increases.empty());
  EXPECT_TRUE(allocate_changes(9, 9).empty());
}

TEST(AllocateChanges, GrowthTooFast) {
  EXPECT_EQ(code_of([] { allocate_changes(6, 19); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { allocate_changes(10, 4); }), ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW(allocate_changes(6, 18));
}

TEST(AllocateChanges, StaggerAwayFromStackedChanges) {
  const ChangeSet first = allocate_changes(12, 18);
  const std::vector<int> stacked = changed_children(12, 18, first);
  const ChangeSet second = allocate_changes(18, 24, stacked);
  for (int p : second.increases)
    EXPECT_EQ(std::count(stacked.begin(), stacked.end(), p), 0) << p;
}

TEST(ChildParents, DecreaseWrapsAround) {
  ChangeSet c;
  c.decreases = {4};
  const auto parents = child_parents(5, 4, c);
  ASSERT_EQ(parents.size(), 4u);
  EXPECT_EQ(parents.back(), (std::vector<int>{4, 0}));
  EXPECT_EQ(parents.front(), (std::vector<int>{1}));
}

TEST(ChildParents, ConsecutiveDecreasesMergeThree) {
  ChangeSet c;
  c.decreases = {2, 3};
  const auto parents = child_parents(6, 4, c);
  ASSERT_EQ(parents.size(), 4u);
  EXPECT_EQ(parents[2], (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(parents[3], (std::vector<int>{5}));
  c.decreases = {1, 2, 3};
  EXPECT_EQ(code_of([&] { child_parents(6, 3, c); }), ErrorCode::kInvalidArgument);
}

TEST(ChildParents, RejectsInconsistentCounts) {
  ChangeSet c;
  c.increases = {0};
  EXPECT_EQ(code_of([&] { child_parents(5, 7, c); }), ErrorCode::kInvalidArgument);
}

TEST(PlanRounds, DiscFirstRounds) {
  const Pattern p = compile({family::Disc{}}, {0.5, 0.5}, rounds(3));
  EXPECT_EQ(counts(p), (std::vector<int>{6, 13, 19}));
  EXPECT_EQ(p.total_stitches, 38);
  EXPECT_EQ(p.rounds[0].parent, -1);
  EXPECT_EQ(p.rounds[1].delta, 7);
}

TEST(PlanRounds, DiscMeanGrowthFollowsGauge) {
  for (double ratio : {0.8, 0.9, 1.0}) {
    const Pattern p = compile({family::Disc{}}, {0.5, 0.5 * ratio}, rounds(50));
    const double mean =
        double(p.rounds.back().stitches - p.rounds.front().stitches) / (p.rounds.size() - 1);
    EXPECT_NEAR(mean, 2 * pi * ratio, 0.05);
  }
}

TEST(PlanRounds, EnneperMatchesProfile) {
  const SurfaceSpec spec{family::Enneper{2}, 2.11};
  const Pattern p = compile(spec, {0.5, 0.4}, rounds(18));
  ASSERT_EQ(p.rounds.size(), 18u);
  for (const RoundPlan& r : p.rounds) {
    EXPECT_NEAR(r.intrinsic_radius, r.index * 0.4, 1e-12);
    const double s = r.param_radius;
    EXPECT_NEAR(2.11 * (s + s * s * s / 3), r.intrinsic_radius, 1e-9);
    EXPECT_NEAR(r.circumference, 2.11 * 2 * pi * (s + s * s * s), 1e-9);
  }
  EXPECT_EQ(p.rounds.front().stitches, 5);
  EXPECT_EQ(p.rounds.back().stitches, 180);
}

TEST(PlanRounds, StopRadiusAndExclusivity) {
  CompileOptions o;
  o.stop_radius = 2.0;
  EXPECT_EQ(compile({family::Disc{}}, {0.5, 0.5}, o).rounds.size(), 4u);
  o.rounds = 3;
  EXPECT_EQ(code_of([&] { compile({family::Disc{}}, {0.5, 0.5}, o); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { compile({family::Enneper{}}, {0.5, 0.5}); }),
            ErrorCode::kInvalidArgument);
}

TEST(PlanRounds, BourRadiusUnreachable) {
  EXPECT_EQ(code_of([] { compile({family::Bour{}}, {0.5, 0.5}, rounds(10)); }),
            ErrorCode::kOutOfDomain);
  EXPECT_NO_THROW(compile({family::Bour{}}, {0.5, 0.5}, rounds(3)));
}

TEST(Sphere, PalindromeWithEquatorPeak) {
  const Pattern p = compile({family::Sphere{4.0}}, {0.5, 0.5});
  const std::vector<int> n = counts(p);
  EXPECT_TRUE(std::equal(n.begin(), n.end(), n.rbegin()));
  EXPECT_EQ(*std::max_element(n.begin(), n.end()), 50);
  EXPECT_EQ(sphere_equator_round({family::Sphere{4.0}}, {0.5, 0.5}), 13);
  EXPECT_EQ(n[12], 50);
  EXPECT_EQ(n.front(), n.back());
  EXPECT_EQ(p.construction, Construction::kMirroredSphere);
  for (std::size_t k = 13; k < p.rounds.size(); ++k)
    EXPECT_EQ(p.rounds[k].direction, Direction::kMirror);
}

TEST(Sphere, DoubledEquatorWhenRoundsAreEven) {
  // pi * S / H = 8 rounds in total, equator at round 4.
  const SurfaceSpec spec{family::Sphere{4.0 / pi}};
  const Pattern p = compile(spec, {0.5, 0.5});
  const std::vector<int> n = counts(p);
  EXPECT_EQ(n.size(), 8u);
  EXPECT_TRUE(std::equal(n.begin(), n.end(), n.rbegin()));
  EXPECT_EQ(n[3], n[4]);
}

TEST(Sphere, MirrorsTripleIncreases) {
  // Round 1 -> 2 grows 4 -> 9, so one parent is worked three times; the
  // mirrored round merges those three children back into one.
  const Pattern p = compile({family::Sphere{2.86}}, {0.5842, 0.4009});
  const std::vector<int> n = counts(p);
  ASSERT_GE(n.size(), 3u);
  EXPECT_EQ(n[0], 4);
  EXPECT_EQ(n[1], 9);
  EXPECT_TRUE(std::equal(n.begin(), n.end(), n.rbegin()));
  const RoundPlan& last = p.rounds.back();
  EXPECT_EQ(last.changes.decreases.size(), 5u);
  const auto parents = child_parents(p.rounds[last.parent].stitches, last.stitches, last.changes);
  EXPECT_TRUE(std::any_of(parents.begin(), parents.end(),
                          [](const auto& ps) { return ps.size() == 3; }));
}

TEST(Sphere, TruncatedByRounds) {
  const Pattern p = compile({family::Sphere{4.0}}, {0.5, 0.5}, rounds(5));
  EXPECT_EQ(p.rounds.size(), 5u);
}

TEST(Richmond, StartsAtShortestRound) {
  const SurfaceSpec spec{family::Richmond{1, 0.4, 1.2}, 3.0};
  const Pattern p = compile(spec, {0.5, 0.5});
  EXPECT_EQ(p.construction, Construction::kBidirectionalRichmond);
  ASSERT_FALSE(p.rounds.empty());
  const RoundPlan& start = p.rounds.front();
  EXPECT_EQ(start.index, 0);
  EXPECT_NEAR(start.param_radius, std::pow(3.0, -0.25), 1e-6);
  EXPECT_FALSE(p.single_direction);
  bool outward = false, inward = false;
  for (const RoundPlan& r : p.rounds) {
    if (r.parent < 0) continue;
    outward |= r.direction == Direction::kOutward;
    inward |= r.direction == Direction::kInward;
    EXPECT_GE(r.stitches, p.rounds[r.parent].stitches);
  }
  EXPECT_TRUE(outward && inward);
}

TEST(Richmond, StartAtBracketEdgeIsSingleDirection) {
  const SurfaceSpec spec{family::Richmond{1, 0.9, 1.5}, 3.0};
  const Pattern p = compile(spec, {0.5, 0.5});
  EXPECT_TRUE(p.single_direction);
  EXPECT_NEAR(p.rounds.front().param_radius, 0.9, 1e-9);
  EXPECT_FALSE(p.notes.empty());
}

TEST(Helicoid, OpenRows) {
  const Pattern p = compile({family::Helicoid{}, 3.0}, {0.5, 0.5}, rounds(3));
  EXPECT_EQ(p.construction, Construction::kRowsHelicoid);
  for (const RoundPlan& r : p.rounds) EXPECT_FALSE(r.closed);
  const Pattern c = compile({family::Catenoid{}, 3.0}, {0.5, 0.5}, rounds(3));
  EXPECT_EQ(counts(p), counts(c));
}

TEST(Moebius, BoundaryHalvesAgree) {
  const SurfaceSpec band{family::MobiusRuled{0.6}};
  for (double w : {0.1, 0.3, 0.6})
    EXPECT_NEAR(moebius_boundary_two_halves(band, w), circumference(band, w), 1e-10);
}

TEST(Moebius, RoundsAndErrors) {
  const SurfaceSpec band{family::MobiusRuled{0.5}, 3.0};
  const Pattern p = compile(band, {0.5, 0.5});
  EXPECT_EQ(p.construction, Construction::kMoebiusBoundary);
  EXPECT_EQ(p.rounds.size(), 4u);
  EXPECT_EQ(p.rounds[1].parent_passes, 2);
  for (const RoundPlan& r : p.rounds)
    EXPECT_EQ(static_cast<int>(r.theta_offsets.size()), r.stitches);
  EXPECT_EQ(code_of([&] { compile(band, {0.5, 0.5}, rounds(7)); }), ErrorCode::kOutOfDomain);
  const SurfaceSpec wide{family::MobiusRuled{0.9}, 1.0};
  EXPECT_EQ(code_of([&] { compile(wide, {0.5, 0.5}, rounds(3)); }), ErrorCode::kOutOfDomain);
}

TEST(Moebius, NotAPlainRoundFamily) {
  EXPECT_EQ(code_of([] { plan_rounds({family::MobiusRuled{}}, {0.5, 0.5}, rounds(2)); }),
            ErrorCode::kNotApplicable);
  EXPECT_EQ(code_of([] { plan_moebius({family::Disc{}}, {0.5, 0.5}); }),
            ErrorCode::kNotApplicable);
}

TEST(Hyperbolic, ProfileOnlyPlan) {
  const Pattern p = compile({family::Hyperbolic{2.0}}, {0.5, 0.5}, rounds(4));
  EXPECT_EQ(p.rounds.size(), 4u);
  const StitchGraph g = build_stitch_graph(p);
  for (const StitchNode& n : g.nodes) EXPECT_FALSE(n.xyz.has_value());
}

TEST(Property, Evenness) {
  const auto r = property::evenness(property::kCases, 20261016);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
  EXPECT_EQ(r.cases, property::kCases);
}

TEST(Property, Conservation) {
  const auto r = property::conservation(property::kCases, 7);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
  EXPECT_EQ(r.cases, property::kCases);
}

TEST(Property, Stagger) {
  const auto r = property::stagger(property::kCases, 42);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
  EXPECT_EQ(r.cases, property::kCases);
}

TEST(Property, GraphCycleStructure) {
  const auto r = property::graph_cycles(property::kCases, 1234);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
  EXPECT_EQ(r.cases, property::kCases);
}

}  // namespace
}  // namespace curvelace
