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

#include "curvelace/emitters.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvelace/error.hpp"

namespace curvelace {
namespace {

using std::numbers::pi;
using ordered_json = nlohmann::ordered_json;

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string fixed(double v, int digits) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

ordered_json surface_json(const SurfaceSpec& spec) {
  ordered_json j;
  j["family"] = std::string(family_name(spec));
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Sphere> ||
                      std::is_same_v<T, family::Hyperbolic>) {
          j["radius"] = round6(f.radius);
        } else if constexpr (std::is_same_v<T, family::Enneper>) {
          j["n"] = f.n;
        } else if constexpr (std::is_same_v<T, family::Richmond>) {
          j["n"] = f.n;
          j["r_min"] = round6(f.r_min);
          j["r_max"] = round6(f.r_max);
        } else if constexpr (std::is_same_v<T, family::Bour>) {
          j["r_max"] = round6(f.r_max);
        } else if constexpr (std::is_same_v<T, family::Catenoid>) {
          j["c"] = round6(f.neck);
          j["r_max"] = round6(f.r_max);
        } else if constexpr (std::is_same_v<T, family::Helicoid>) {
          j["c"] = round6(f.pitch);
          j["turns"] = f.turns;
          j["r_max"] = round6(f.r_max);
        } else if constexpr (std::is_same_v<T, family::MobiusRuled>) {
          j["half_width"] = round6(f.half_width);
        }
      },
      spec.shape);
  j["scale"] = round6(spec.scale);
  return j;
}

std::string describe_surface(const SurfaceSpec& spec) {
  std::string params;
  const auto add = [&](const std::string& key, const std::string& value) {
    params += (params.empty() ? "" : ", ") + key + "=" + value;
  };
  const ordered_json doc = surface_json(spec);
  for (const auto& [key, value] : doc.items()) {
    if (key == "family" || key == "scale") continue;
    add(key, value.is_number_integer() ? std::to_string(value.get<int>())
                                       : fixed(value.get<double>(), 6));
  }
  std::string out(family_name(spec));
  if (!params.empty()) out += " (" + params + ")";
  out += ", scale " + fixed(spec.scale, 6) + " cm/unit";
  return out;
}

std::string signed_delta(int d) { return (d < 0 ? "-" : "+") + std::to_string(std::abs(d)); }

std::string section_title(const Pattern& pattern, const RoundPlan& round) {
  switch (pattern.construction) {
    case Construction::kMirroredSphere:
      return round.direction == Direction::kMirror ? "decrease (mirrored half)"
                                                   : "increase (first half)";
    case Construction::kBidirectionalRichmond:
      if (round.parent < 0) return "start round (shortest circumference)";
      return round.direction == Direction::kOutward ? "outward, toward r_max"
                                                    : "inward, toward r_min";
    default:
      return "";
  }
}

struct Unit {
  int plain;           // plain stitches before the change
  std::string change;  // inc, inc3 or dec
  bool operator==(const Unit&) const = default;
};

// Greedy run-length encoding: at each unit take the repeated block that
// saves the most units (shorter blocks win ties), encoding blocks recursively.
std::string encode_units(std::span<const Unit> units) {
  std::string out;
  for (std::size_t i = 0; i < units.size();) {
    std::size_t best_len = 1, best_reps = 1;
    for (std::size_t len = 1; i + 2 * len <= units.size(); ++len) {
      std::size_t reps = 1;
      while (i + (reps + 1) * len <= units.size() &&
             std::equal(units.begin() + i, units.begin() + i + len,
                        units.begin() + i + reps * len))
        ++reps;
      if (reps > 1 && len * (reps - 1) > best_len * (best_reps - 1)) {
        best_len = len;
        best_reps = reps;
      }
    }
    std::string text;
    if (best_len == 1) {
      const Unit& u = units[i];
      text = u.plain == 0 ? u.change : std::to_string(u.plain) + " sc, " + u.change;
    } else {
      text = encode_units(units.subspan(i, best_len));
    }
    if (best_reps > 1) text = "(" + text + ") ×" + std::to_string(best_reps);
    out += (out.empty() ? "" : ", ") + text;
    i += best_len * best_reps;
  }
  return out;
}

}  // namespace

std::string encode_round_body(const Pattern& pattern, int position) {
  const RoundPlan& round = pattern.rounds.at(position);
  const bool rows = pattern.construction == Construction::kRowsHelicoid;
  if (round.parent < 0) {
    const std::string n = std::to_string(round.stitches);
    if (pattern.construction == Construction::kMoebiusBoundary)
      return "chain " + n + ", half twist, join";
    if (rows) return "chain " + n;
    if (round.index == 0) return "chain " + n + ", join in the round";
    return n + " sc in magic ring";
  }

  const RoundPlan& parent = pattern.rounds[round.parent];
  const int parent_count = parent.stitches * round.parent_passes;
  const std::string prefix =
      round.parent_passes == 2 ? "along both sides of the chain: " : "";
  if (round.changes.empty()) return prefix + std::to_string(parent_count) + " sc";

  // Working-order tokens: sc (1 -> 1), inc (1 -> 2), inc3 (1 -> 3), dec (2 -> 1),
  // dec3 (3 -> 1).
  const auto parents = child_parents(parent_count, round.stitches, round.changes);
  std::vector<std::string> tokens;
  for (std::size_t c = 0; c < parents.size();) {
    if (parents[c].size() > 1) {
      tokens.emplace_back(parents[c].size() == 2 ? "dec" : "dec3");
      ++c;
      continue;
    }
    std::size_t run = 1;
    while (c + run < parents.size() && parents[c + run] == parents[c]) ++run;
    tokens.emplace_back(run == 1 ? "sc" : run == 2 ? "inc" : "inc3");
    c += run;
  }

  std::vector<Unit> units;
  int plain = 0;
  for (const std::string& t : tokens) {
    if (t == "sc") {
      ++plain;
    } else {
      units.push_back({plain, t});
      plain = 0;
    }
  }

  std::vector<std::string> pieces;
  if (!units.empty()) pieces.push_back(encode_units(units));
  if (plain > 0) pieces.push_back(std::to_string(plain) + " sc");

  std::string body = prefix;
  for (std::size_t i = 0; i < pieces.size(); ++i) body += (i ? ", " : "") + pieces[i];
  return body;
}

std::string render_text(const Pattern& pattern) {
  std::ostringstream out;
  out << "Surface: " << describe_surface(pattern.surface) << "\n";
  out << "Gauge: W=" << fixed(pattern.gauge.width, 3)
      << " cm, H=" << fixed(pattern.gauge.height, 3) << " cm\n";
  out << "Construction: " << to_string(pattern.construction) << "\n";
  out << "Total stitches: " << pattern.total_stitches << "\n";
  for (const std::string& note : pattern.notes) out << "Note: " << note << "\n";

  const bool rows = pattern.construction == Construction::kRowsHelicoid;
  std::string section;
  for (int pos = 0; pos < static_cast<int>(pattern.rounds.size()); ++pos) {
    const RoundPlan& round = pattern.rounds[pos];
    const std::string title = section_title(pattern, round);
    if (title != section) {
      out << "\n-- " << title << " --\n";
      section = title;
    } else if (pos == 0) {
      out << "\n";
    }
    out << (rows ? "Row " : "Round ") << round.index << " (" << round.stitches << " sts";
    if (round.parent >= 0) out << ", " << signed_delta(round.delta);
    out << "): " << encode_round_body(pattern, pos) << "\n";
  }
  return out.str();
}

std::string render_csv(const Pattern& pattern) {
  std::ostringstream out;
  out << "l,delta_N,N\n";
  for (const RoundPlan& round : pattern.rounds) {
    out << round.index << ",";
    if (round.parent >= 0) out << round.delta;
    out << "," << round.stitches << "\n";
  }
  out << "total,," << pattern.total_stitches << "\n";
  return out.str();
}

std::string render_json(const Pattern& pattern) {
  ordered_json doc;
  doc["surface"] = surface_json(pattern.surface);
  doc["gauge"] = {{"W", round6(pattern.gauge.width)}, {"H", round6(pattern.gauge.height)}};
  ordered_json rounds = ordered_json::array();
  for (const RoundPlan& round : pattern.rounds) {
    ordered_json r;
    r["l"] = round.index;
    r["direction"] = std::string(to_string(round.direction));
    r["parent"] = round.parent;
    if (round.parent_passes != 1) r["parent_passes"] = round.parent_passes;
    r["R_cm"] = round6(round.intrinsic_radius);
    r["C_cm"] = round6(round.circumference);
    r["N"] = round.stitches;
    r["dN"] = round.delta;
    r["changes"] = {{"inc", round.changes.increases}, {"dec", round.changes.decreases}};
    if (!round.theta_offsets.empty()) {
      ordered_json offsets = ordered_json::array();
      for (double t : round.theta_offsets) offsets.push_back(round6(t));
      r["theta_offsets"] = std::move(offsets);
    }
    rounds.push_back(std::move(r));
  }
  doc["rounds"] = std::move(rounds);
  doc["total"] = pattern.total_stitches;
  doc["construction"] = std::string(to_string(pattern.construction));
  doc["notes"] = pattern.notes;
  return doc.dump(2) + "\n";
}

std::string export_obj(const SurfaceSpec& spec, const MeshSampling& sampling) {
  validate(spec);
  if (!has_embedding(spec)) throw Error(ErrorCode::kNoEmbedding, "no embedding");
  const int nr = sampling.r_samples;
  const int nt = sampling.theta_samples;
  if (nr < 2 || nr > 4096 || nt < 3 || nt > 4096)
    throw Error(ErrorCode::kInvalidArgument,
                "mesh sampling must be within 2..4096 (r) and 3..4096 (theta)");

  ParamInterval dom = radial_domain(spec);
  if (!std::isfinite(dom.hi)) dom.hi = dom.lo + 1.0;
  const double r_lo = sampling.r_lo.value_or(dom.lo);
  const double r_hi = sampling.r_hi.value_or(dom.hi);
  if (!(r_lo < r_hi))
    throw Error(ErrorCode::kInvalidArgument, "mesh radial range is empty");

  const bool helicoid = std::holds_alternative<family::Helicoid>(spec.shape);
  const bool moebius = std::holds_alternative<family::MobiusRuled>(spec.shape);
  const double period = theta_period(spec);
  // Closed families weld the seam; the Moebius seam joins r to -r.
  const double dt = helicoid ? period / (nt - 1) : period / nt;
  const bool moebius_weld = moebius && std::abs(r_lo + r_hi) < 1e-12;

  std::ostringstream out;
  out << "# curvelace mesh: " << family_name(spec) << " " << nr << "x" << nt << "\n";
  for (int i = 0; i < nr; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (nr - 1);
    for (int j = 0; j < nt; ++j) {
      const SurfacePoint p = point(spec, r, j * dt);
      out << "v " << fixed(p.x, 6) << " " << fixed(p.y, 6) << " " << fixed(p.z, 6) << "\n";
    }
  }
  const auto id = [&](int i, int j) { return i * nt + j + 1; };
  const auto quad = [&](int a, int b, int c, int d) {
    out << "f " << a << " " << b << " " << c << "\n";
    out << "f " << a << " " << c << " " << d << "\n";
  };
  for (int i = 0; i + 1 < nr; ++i) {
    for (int j = 0; j + 1 < nt; ++j) quad(id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
    if (helicoid || (moebius && !moebius_weld)) continue;
    if (moebius) {
      quad(id(i, nt - 1), id(i + 1, nt - 1), id(nr - 2 - i, 0), id(nr - 1 - i, 0));
    } else {
      quad(id(i, nt - 1), id(i + 1, nt - 1), id(i + 1, 0), id(i, 0));
    }
  }
  return out.str();
}

std::string export_graph(const StitchGraph& graph) {
  ordered_json doc;
  ordered_json nodes = ordered_json::array();
  for (const StitchNode& n : graph.nodes) {
    ordered_json j;
    j["round"] = n.round;
    j["idx"] = n.index;
    j["theta"] = round6(n.theta);
    if (n.xyz) j["xyz"] = {round6(n.xyz->x), round6(n.xyz->y), round6(n.xyz->z)};
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  ordered_json parents = ordered_json::array();
  for (const auto& [c, p] : graph.parent_edges) parents.push_back({c, p});
  doc["parent_edges"] = std::move(parents);
  ordered_json lateral = ordered_json::array();
  for (const auto& [a, b] : graph.lateral_edges) lateral.push_back({a, b});
  doc["lateral_edges"] = std::move(lateral);
  return doc.dump() + "\n";
}

}  // namespace curvelace
