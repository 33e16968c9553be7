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
#include <numeric>
#include <set>

#include "curvelace/error.hpp"
#include "curvelace/numerics.hpp"

namespace curvelace {
namespace {

using std::numbers::pi;

constexpr double kRoundSlack = 1e-9;

[[noreturn]] void incompatible() {
  throw Error(ErrorCode::kInvalidArgument,
              "gauge incompatible with curvature growth");
}

bool starts_from_curve(const SurfaceSpec& spec) {
  return std::holds_alternative<family::Catenoid>(spec.shape) ||
         std::holds_alternative<family::Helicoid>(spec.shape) ||
         std::holds_alternative<family::Richmond>(spec.shape);
}

bool is_moebius(const SurfaceSpec& spec) {
  return std::holds_alternative<family::MobiusRuled>(spec.shape);
}

int rounds_within(double distance, double height) {
  return static_cast<int>(std::floor(distance / height + kRoundSlack));
}

// Attaches the round to its parent: allocation, delta and the stacking
// anchor handed to the next round worked into this one.
void link_round(RoundPlan& round, const RoundPlan& parent, int parent_pos,
                std::vector<int>& stacked) {
  round.parent = parent_pos;
  round.delta = round.stitches - parent.stitches;
  round.changes = allocate_changes(parent.stitches, round.stitches, stacked);
  stacked = changed_children(parent.stitches, round.stitches, round.changes);
}

double moebius_speed(const SurfaceSpec& spec, double w, double t) {
  return std::sqrt(metric(spec, w, t).G);
}

numerics::QuadratureOptions arc_quadrature() {
  numerics::QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-13;
  return o;
}

// Stitch boundaries at equal arc-length steps along the boundary loop of
// half-width w, which sweeps t over [0, 2pi).
std::vector<double> equal_arc_offsets(const SurfaceSpec& spec, double w, int n,
                                      double length) {
  const auto speed = [&](double t) { return moebius_speed(spec, w, t); };
  std::vector<double> offsets(n, 0.0);
  const double step = length / n;
  double t_prev = 0.0;
  double arc_prev = 0.0;
  for (int k = 1; k < n; ++k) {
    const double target = k * step;
    const auto residual = [&](double t) {
      return arc_prev +
             numerics::integrate(speed, t_prev, t, arc_quadrature()).value -
             target;
    };
    const double t = numerics::find_root(residual, t_prev, 2.0 * pi, 1e-13);
    arc_prev += numerics::integrate(speed, t_prev, t, arc_quadrature()).value;
    t_prev = t;
    offsets[k] = t;
  }
  return offsets;
}

}  // namespace

void validate(const Gauge& gauge) {
  const auto ok = [](double v) { return std::isfinite(v) && v >= 0.1 && v <= 5.0; };
  if (!ok(gauge.width) || !ok(gauge.height))
    throw Error(ErrorCode::kInvalidArgument,
                "gauge must satisfy 0.1 <= W, H <= 5 cm");
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kOutward: return "outward";
    case Direction::kInward: return "inward";
    case Direction::kMirror: return "mirror";
  }
  return "outward";
}

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::kClosedRounds: return "closed-rounds";
    case Construction::kMirroredSphere: return "mirrored-sphere";
    case Construction::kBidirectionalRichmond: return "bidirectional-richmond";
    case Construction::kRowsHelicoid: return "rows-helicoid";
    case Construction::kMoebiusBoundary: return "moebius-boundary";
  }
  return "closed-rounds";
}

const std::vector<int>& RoundPlan::change_positions() const {
  return changes.decreases.empty() ? changes.increases : changes.decreases;
}

int stitch_count(double circumference, double width, bool closed) {
  if (!(circumference >= 0.0) || !(width > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "stitch_count: bad length or width");
  const int n = static_cast<int>(std::floor(circumference / width + 0.5));
  return std::max(n, closed ? kMinClosedStitches : 1);
}

ChangeSet allocate_changes(int prev_n, int next_n, std::span<const int> stacked) {
  if (prev_n < 1 || next_n < 1)
    throw Error(ErrorCode::kInvalidArgument, "stitch counts must be positive");
  if (next_n > 3 * prev_n || next_n < (prev_n + 1) / 2) incompatible();
  ChangeSet out;
  const int d = std::abs(next_n - prev_n);
  if (d == 0) return out;
  const bool decrease = next_n < prev_n;

  std::vector<int> base(d);
  for (int i = 0; i < d; ++i)
    base[i] = static_cast<int>(static_cast<long long>(i) * prev_n / d);

  const std::set<int> avoid(stacked.begin(), stacked.end());
  const auto collides = [&](int shift) {
    for (int b : base) {
      const int p = (b + shift) % prev_n;
      if (avoid.count(p)) return true;
      if (decrease && avoid.count((p + 1) % prev_n)) return true;
    }
    return false;
  };

  int shift = 0;
  if (!avoid.empty()) {
    const int gap = std::max(1, prev_n / d);
    const int preferred = (*avoid.begin() + (gap + 1) / 2) % prev_n;
    shift = preferred;
    for (int s = 0; s < prev_n; ++s) {
      const int candidate = (preferred + s) % prev_n;
      if (!collides(candidate)) {
        shift = candidate;
        break;
      }
    }
  }

  std::vector<int> positions(d);
  for (int i = 0; i < d; ++i) positions[i] = (base[i] + shift) % prev_n;
  std::sort(positions.begin(), positions.end());
  (decrease ? out.decreases : out.increases) = std::move(positions);
  return out;
}

std::vector<std::vector<int>> child_parents(int parent_count, int child_count,
                                            const ChangeSet& changes) {
  const auto bad = [] {
    throw Error(ErrorCode::kInvalidArgument, "inconsistent change set");
  };
  if (parent_count < 1) bad();
  const int n = parent_count;
  std::vector<int> extra(n, 0);
  std::vector<char> is_dec(n, 0);
  for (int p : changes.increases) {
    if (p < 0 || p >= n) bad();
    ++extra[p];
  }
  for (int p : changes.decreases) {
    if (p < 0 || p >= n || n < 2 || is_dec[p]) bad();
    is_dec[p] = 1;
  }

  // A run of k consecutive decrease entries starting at p merges parents
  // p .. p + k into one child; k is 1 (dec) or 2 (dec3).
  std::vector<int> merge(n, 0);
  std::vector<char> covered(n, 0);
  bool any_start = false;
  for (int p = 0; p < n; ++p) {
    if (!is_dec[p] || is_dec[(p + n - 1) % n]) continue;
    any_start = true;
    int k = 1;
    while (k < n && is_dec[(p + k) % n]) ++k;
    if (k > 2 || k + 1 > n) bad();
    merge[p] = k + 1;
    for (int j = 0; j <= k; ++j) {
      const int q = (p + j) % n;
      if (covered[q] || extra[q]) bad();
      covered[q] = 1;
    }
  }
  if (!changes.decreases.empty() && !any_start) bad();

  std::vector<std::vector<int>> out;
  out.reserve(child_count);
  for (int p = 0; p < n; ++p) {
    if (merge[p]) {
      std::vector<int> group;
      for (int j = 0; j < merge[p]; ++j) group.push_back((p + j) % n);
      out.push_back(std::move(group));
      continue;
    }
    if (covered[p]) continue;
    for (int k = 0; k <= extra[p]; ++k) out.push_back({p});
  }
  if (static_cast<int>(out.size()) != child_count) bad();
  return out;
}

std::vector<int> changed_children(int parent_count, int child_count,
                                  const ChangeSet& changes) {
  const auto parents = child_parents(parent_count, child_count, changes);
  std::vector<int> per_parent(parent_count, 0);
  for (const auto& ps : parents)
    if (ps.size() == 1) ++per_parent[ps.front()];
  std::vector<int> out;
  for (int c = 0; c < child_count; ++c) {
    const auto& ps = parents[c];
    if (ps.size() > 1 || per_parent[ps.front()] > 1) out.push_back(c);
  }
  return out;
}

ChangeSet allocate_changes_by_arc(std::span<const double> parent_offsets,
                                  std::span<const double> child_offsets,
                                  double period) {
  const int np = static_cast<int>(parent_offsets.size());
  const int nc = static_cast<int>(child_offsets.size());
  if (np < 1 || nc < 1)
    throw Error(ErrorCode::kInvalidArgument, "empty round");
  if (!std::is_sorted(parent_offsets.begin(), parent_offsets.end()) ||
      !std::is_sorted(child_offsets.begin(), child_offsets.end()))
    throw Error(ErrorCode::kInvalidArgument, "stitch offsets must be sorted");

  // owner[c]: parent interval containing child c's midpoint. Midpoints are
  // increasing, so owners are non-decreasing.
  std::vector<int> owner(nc);
  for (int c = 0; c < nc; ++c) {
    const double end = c + 1 < nc ? child_offsets[c + 1] : period;
    const double mid = 0.5 * (child_offsets[c] + end);
    const auto it = std::upper_bound(parent_offsets.begin(), parent_offsets.end(), mid);
    owner[c] = std::max(0, static_cast<int>(it - parent_offsets.begin()) - 1);
  }
  std::vector<int> count(np, 0);
  for (int o : owner) ++count[o];

  // Orphaned parents borrow the adjacent child from a neighbour that has
  // several, otherwise they are merged with a neighbour into a decrease.
  std::vector<int> pair_with(np, -1);
  for (int p = 0; p < np; ++p) {
    if (count[p] != 0) continue;
    if (p > 0 && count[p - 1] >= 2 && pair_with[p - 1] < 0) {
      --count[p - 1];
      ++count[p];
      continue;
    }
    if (p + 1 < np && count[p + 1] >= 2 && pair_with[p + 1] < 0) {
      --count[p + 1];
      ++count[p];
      continue;
    }
    if (p + 1 < np && count[p + 1] == 1 && pair_with[p + 1] < 0) {
      pair_with[p] = p + 1;
      pair_with[p + 1] = p;
      continue;
    }
    if (p > 0 && count[p - 1] == 1 && pair_with[p - 1] < 0) {
      pair_with[p] = p - 1;
      pair_with[p - 1] = p;
      continue;
    }
    incompatible();
  }

  ChangeSet out;
  for (int p = 0; p < np; ++p) {
    if (pair_with[p] >= 0) {
      if (pair_with[p] == p + 1) out.decreases.push_back(p);
      continue;
    }
    if (count[p] > 3) incompatible();
    for (int k = 1; k < count[p]; ++k) out.increases.push_back(p);
  }
  return out;
}

std::vector<RoundPlan> plan_rounds(const SurfaceSpec& spec, const Gauge& gauge,
                                   const CompileOptions& options) {
  validate(spec);
  validate(gauge);
  if (is_moebius(spec))
    throw Error(ErrorCode::kNotApplicable, "not applicable");
  if (options.rounds && options.stop_radius)
    throw Error(ErrorCode::kInvalidArgument,
                "give either a round count or a stop radius, not both");

  const double H = gauge.height;
  const double anchor = radial_anchor(spec);
  int last = 0;
  if (options.rounds) {
    if (*options.rounds < 1)
      throw Error(ErrorCode::kInvalidArgument, "rounds must be >= 1");
    last = *options.rounds;
  } else if (options.stop_radius) {
    if (!(*options.stop_radius > 0.0))
      throw Error(ErrorCode::kInvalidArgument, "stop radius must be > 0");
    last = rounds_within(*options.stop_radius, H);
  } else {
    const ParamInterval dom = radial_domain(spec);
    if (!std::isfinite(dom.hi))
      throw Error(ErrorCode::kInvalidArgument,
                  "a round count or stop radius is required for this surface");
    last = rounds_within(radial_arclength(spec, anchor, dom.hi), H);
  }

  const bool curve_start = starts_from_curve(spec);
  const bool closed = !std::holds_alternative<family::Helicoid>(spec.shape);
  const int first = curve_start ? 0 : 1;
  if (last < first)
    throw Error(ErrorCode::kOutOfDomain, "radius unreachable");

  std::vector<RoundPlan> rounds;
  std::vector<int> stacked;
  for (int l = first; l <= last; ++l) {
    RoundPlan round;
    round.index = l;
    round.closed = closed;
    round.intrinsic_radius = l * H;
    round.param_radius = invert_radius(spec, round.intrinsic_radius);
    round.circumference = circumference(spec, round.param_radius);
    round.stitches = stitch_count(round.circumference, gauge.width, closed);
    if (l == 1 && !curve_start && closed)
      round.stitches = std::max(round.stitches, kMinFirstRoundStitches);
    if (!rounds.empty()) {
      const int parent = static_cast<int>(rounds.size()) - 1;
      link_round(round, rounds[parent], parent, stacked);
    }
    rounds.push_back(std::move(round));
  }
  return rounds;
}

int sphere_equator_round(const SurfaceSpec& spec, const Gauge& gauge) {
  validate(spec);
  validate(gauge);
  const auto* sphere = std::get_if<family::Sphere>(&spec.shape);
  if (sphere == nullptr) throw Error(ErrorCode::kNotApplicable, "not applicable");
  const double radius_cm = sphere->radius * spec.scale;
  return std::max(1, static_cast<int>(std::lround(pi * radius_cm / (2.0 * gauge.height))));
}

std::vector<RoundPlan> mirror_sphere(const SurfaceSpec& spec, const Gauge& gauge,
                                     std::vector<RoundPlan> half) {
  validate(spec);
  validate(gauge);
  const auto* sphere = std::get_if<family::Sphere>(&spec.shape);
  if (sphere == nullptr) throw Error(ErrorCode::kNotApplicable, "not applicable");
  if (half.empty()) throw Error(ErrorCode::kInvalidArgument, "empty half sphere");

  const int eq = static_cast<int>(half.size());
  const double radius_cm = sphere->radius * spec.scale;
  const long full = std::lround(pi * radius_cm / gauge.height);
  // The equator round is worked twice when the full sphere holds an even
  // number of rounds.
  const bool doubled_equator = full == 2L * eq;
  const int total = doubled_equator ? 2 * eq : 2 * eq - 1;
  const double r_eq = half.back().intrinsic_radius;

  for (int k = eq + 1; k <= total; ++k) {
    const int s = doubled_equator ? 2 * eq + 1 - k : 2 * eq - k;  // source round
    const RoundPlan& src = half[s - 1];
    RoundPlan round;
    round.index = k;
    round.direction = Direction::kMirror;
    round.stitches = src.stitches;
    round.circumference = src.circumference;
    round.intrinsic_radius = doubled_equator ? 2.0 * r_eq + gauge.height - src.intrinsic_radius
                                             : 2.0 * r_eq - src.intrinsic_radius;
    round.param_radius =
        std::clamp(round.intrinsic_radius / spec.scale, 0.0, pi * sphere->radius);
    const int parent_pos = k - 2;
    const RoundPlan& parent = half[parent_pos];
    round.parent = parent_pos;
    round.delta = round.stitches - parent.stitches;

    if (s < eq) {
      // Reverse the transition from round s to round s + 1.
      const RoundPlan& grown = half[s];
      const auto parents = child_parents(src.stitches, grown.stitches, grown.changes);
      std::vector<int> per_parent(src.stitches, 0);
      for (const auto& ps : parents)
        if (ps.size() == 1) ++per_parent[ps.front()];
      for (int c = 0; c < grown.stitches; ++c) {
        const auto& ps = parents[c];
        if (ps.size() == 2) {
          round.changes.increases.push_back(c);
        } else if (per_parent[ps.front()] > 1 &&
                   (c == 0 || parents[c - 1] != ps)) {
          // k children of one parent become a k-into-one decrease.
          for (int j = 1; j < per_parent[ps.front()]; ++j)
            round.changes.decreases.push_back(c + j - 1);
        }
      }
    }
    half.push_back(std::move(round));
  }
  return half;
}

double moebius_boundary_two_halves(const SurfaceSpec& spec, double w) {
  const auto plus = [&](double t) { return moebius_speed(spec, w, t); };
  const auto minus = [&](double t) { return moebius_speed(spec, -w, t); };
  return numerics::integrate(plus, 0.0, pi, arc_quadrature()).value +
         numerics::integrate(minus, 0.0, pi, arc_quadrature()).value;
}

Pattern plan_bidirectional(const SurfaceSpec& spec, const Gauge& gauge,
                           const CompileOptions& options) {
  validate(spec);
  validate(gauge);
  const auto* rich = std::get_if<family::Richmond>(&spec.shape);
  if (rich == nullptr) throw Error(ErrorCode::kNotApplicable, "not applicable");
  if (options.rounds && options.stop_radius)
    throw Error(ErrorCode::kInvalidArgument,
                "give either a round count or a stop radius, not both");

  Pattern pattern;
  pattern.surface = spec;
  pattern.gauge = gauge;
  pattern.construction = Construction::kBidirectionalRichmond;

  const double H = gauge.height;
  const double r_star = min_circumference_radius(spec);
  RoundPlan start;
  start.index = 0;
  start.param_radius = r_star;
  start.circumference = circumference(spec, r_star);
  start.stitches = stitch_count(start.circumference, gauge.width);
  pattern.rounds.push_back(start);

  const double edge_tol = 1e-6 * std::max(1.0, rich->r_max);
  const bool at_min = r_star - rich->r_min <= edge_tol;
  const bool at_max = rich->r_max - r_star <= edge_tol;
  pattern.single_direction = at_min || at_max;

  const auto count_for = [&](double distance) {
    int n = rounds_within(distance, H);
    if (options.rounds) n = std::min(n, *options.rounds);
    if (options.stop_radius) n = std::min(n, rounds_within(*options.stop_radius, H));
    return std::max(n, 0);
  };
  const int n_out = at_max ? 0 : count_for(radial_arclength(spec, r_star, rich->r_max));
  const int n_in = at_min ? 0 : count_for(radial_arclength(spec, rich->r_min, r_star));

  const auto grow = [&](int count, double sign, Direction direction) {
    int parent_pos = 0;
    std::vector<int> stacked;
    for (int l = 1; l <= count; ++l) {
      RoundPlan round;
      round.index = l;
      round.direction = direction;
      round.intrinsic_radius = l * H;
      round.param_radius = radius_at_distance(spec, r_star, sign * l * H);
      round.circumference = circumference(spec, round.param_radius);
      round.stitches = stitch_count(round.circumference, gauge.width);
      link_round(round, pattern.rounds[parent_pos], parent_pos, stacked);
      pattern.rounds.push_back(std::move(round));
      parent_pos = static_cast<int>(pattern.rounds.size()) - 1;
    }
  };
  grow(n_out, 1.0, Direction::kOutward);
  grow(n_in, -1.0, Direction::kInward);

  if (pattern.single_direction)
    pattern.notes.emplace_back("shortest round lies at the edge of [r_min, r_max]; worked in one direction");
  return pattern;
}

Pattern plan_moebius(const SurfaceSpec& spec, const Gauge& gauge,
                     const CompileOptions& options) {
  validate(spec);
  validate(gauge);
  const auto* band = std::get_if<family::MobiusRuled>(&spec.shape);
  if (band == nullptr) throw Error(ErrorCode::kNotApplicable, "not applicable");
  if (options.rounds && options.stop_radius)
    throw Error(ErrorCode::kInvalidArgument,
                "give either a round count or a stop radius, not both");

  const double H = gauge.height;
  int last = rounds_within(band->half_width * spec.scale, H);
  if (options.rounds) last = *options.rounds;
  if (options.stop_radius) last = rounds_within(*options.stop_radius, H);
  if (last < 0) throw Error(ErrorCode::kInvalidArgument, "rounds must be >= 0");
  const double widest = last * H / spec.scale;
  if (widest > 1.0)
    throw Error(ErrorCode::kOutOfDomain, "band too wide for parametrization");
  if (widest > band->half_width * (1.0 + 1e-12))
    throw Error(ErrorCode::kOutOfDomain, "radius unreachable");

  Pattern pattern;
  pattern.surface = spec;
  pattern.gauge = gauge;
  pattern.construction = Construction::kMoebiusBoundary;

  RoundPlan centre;
  centre.index = 0;
  centre.circumference = circumference(spec, 0.0);
  centre.stitches = stitch_count(centre.circumference, gauge.width);
  centre.theta_offsets.resize(centre.stitches);
  for (int k = 0; k < centre.stitches; ++k)
    centre.theta_offsets[k] = pi * k / centre.stitches;
  pattern.rounds.push_back(centre);

  for (int l = 1; l <= last; ++l) {
    const double w = l * H / spec.scale;
    RoundPlan round;
    round.index = l;
    round.param_radius = w;
    round.intrinsic_radius = l * H;
    round.circumference = circumference(spec, w);
    round.stitches = stitch_count(round.circumference, gauge.width);
    round.theta_offsets =
        equal_arc_offsets(spec, w, round.stitches, round.circumference);

    const RoundPlan& parent = pattern.rounds.back();
    round.parent = static_cast<int>(pattern.rounds.size()) - 1;
    round.delta = round.stitches - parent.stitches;
    if (l == 1) {
      // The first round goes along both sides of the centre chain.
      round.parent_passes = 2;
      std::vector<double> sides(parent.theta_offsets);
      for (double t : parent.theta_offsets) sides.push_back(t + pi);
      round.changes = allocate_changes_by_arc(sides, round.theta_offsets, 2.0 * pi);
    } else {
      round.changes =
          allocate_changes_by_arc(parent.theta_offsets, round.theta_offsets, 2.0 * pi);
    }
    pattern.rounds.push_back(std::move(round));
  }
  pattern.notes.emplace_back(
      "chain the centre round, give it a half twist and join; round 1 is worked along both sides of the chain");
  return pattern;
}

Pattern compile(const SurfaceSpec& spec, const Gauge& gauge,
                const CompileOptions& options) {
  validate(spec);
  validate(gauge);
  Pattern pattern;
  if (std::holds_alternative<family::Richmond>(spec.shape)) {
    pattern = plan_bidirectional(spec, gauge, options);
  } else if (is_moebius(spec)) {
    pattern = plan_moebius(spec, gauge, options);
  } else if (std::holds_alternative<family::Sphere>(spec.shape)) {
    if (options.rounds && options.stop_radius)
      throw Error(ErrorCode::kInvalidArgument,
                  "give either a round count or a stop radius, not both");
    pattern.surface = spec;
    pattern.gauge = gauge;
    pattern.construction = Construction::kMirroredSphere;
    CompileOptions half_options;
    half_options.rounds = sphere_equator_round(spec, gauge);
    pattern.rounds = mirror_sphere(spec, gauge, plan_rounds(spec, gauge, half_options));
    if (options.rounds && *options.rounds < static_cast<int>(pattern.rounds.size()))
      pattern.rounds.resize(std::max(1, *options.rounds));
    if (options.stop_radius) {
      const int keep = std::max(1, rounds_within(*options.stop_radius, gauge.height));
      if (keep < static_cast<int>(pattern.rounds.size())) pattern.rounds.resize(keep);
    }
  } else {
    pattern.surface = spec;
    pattern.gauge = gauge;
    pattern.rounds = plan_rounds(spec, gauge, options);
    if (std::holds_alternative<family::Helicoid>(spec.shape)) {
      pattern.construction = Construction::kRowsHelicoid;
      pattern.notes.emplace_back(
          "rows are worked flat from the axis outward; work the other half of the helicoid the same way");
    } else if (std::holds_alternative<family::Catenoid>(spec.shape)) {
      pattern.notes.emplace_back(
          "chain the neck round and join; work the other half of the catenoid the same way");
    }
  }
  pattern.total_stitches = 0;
  for (const RoundPlan& r : pattern.rounds) pattern.total_stitches += r.stitches;
  return pattern;
}

StitchGraph build_stitch_graph(const Pattern& pattern) {
  const SurfaceSpec& spec = pattern.surface;
  const bool embedded = has_embedding(spec);
  const bool moebius = pattern.construction == Construction::kMoebiusBoundary;

  StitchGraph graph;
  for (int pos = 0; pos < static_cast<int>(pattern.rounds.size()); ++pos) {
    const RoundPlan& round = pattern.rounds[pos];
    const int first = static_cast<int>(graph.nodes.size());
    graph.round_start.push_back(first);
    const double range =
        moebius ? (round.index == 0 ? pi : 2.0 * pi) : theta_period(spec);

    for (int k = 0; k < round.stitches; ++k) {
      StitchNode node;
      node.round = pos;
      node.index = k;
      if (!round.theta_offsets.empty()) {
        const double end = k + 1 < round.stitches ? round.theta_offsets[k + 1] : range;
        node.theta = 0.5 * (round.theta_offsets[k] + end);
      } else {
        node.theta = range * (k + 0.5) / round.stitches;
      }
      if (embedded) {
        if (moebius && node.theta >= pi) {
          node.xyz = point(spec, -round.param_radius, node.theta - pi);
        } else {
          node.xyz = point(spec, round.param_radius, node.theta);
        }
      }
      graph.nodes.push_back(node);
    }
    for (int k = 0; k + 1 < round.stitches; ++k)
      graph.lateral_edges.emplace_back(first + k, first + k + 1);
    if (round.closed && round.stitches > 1)
      graph.lateral_edges.emplace_back(first + round.stitches - 1, first);

    if (round.parent >= 0) {
      const RoundPlan& parent = pattern.rounds[round.parent];
      const int parent_first = graph.round_start[round.parent];
      const auto parents = child_parents(parent.stitches * round.parent_passes,
                                         round.stitches, round.changes);
      for (int c = 0; c < round.stitches; ++c)
        for (int v : parents[c])
          graph.parent_edges.emplace_back(first + c,
                                          parent_first + v % parent.stitches);
    }
  }
  return graph;
}

}  // namespace curvelace
