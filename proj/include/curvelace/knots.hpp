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
#include <string_view>
#include <vector>

namespace curvelace {

// Best known lower bound on the ropelength of any non-trivial knot.
inline constexpr double kRopelengthLowerBound = 31.32;
// Simulated minimum ropelength of the trefoil.
inline constexpr double kTrefoilRopelength = 32.74;
// Extra tube per crossing beyond the trefoil's three, in cm.
inline constexpr double kExtraCmPerCrossing = 10.0;

inline constexpr const char* kKnotTableEnv = "CURVELACE_KNOT_TABLE";

struct KnotEntry {
  std::string name;  // Rolfsen id such as "5_2"
  int crossings = 3;
  std::optional<double> min_ropelength;
};

class KnotTable {
 public:
  // Prime knots up to seven crossings; only the trefoil carries a bound.
  static KnotTable builtin();
  // JSON array of {"name", "crossings", "min_ropelength"?}.
  static KnotTable parse_json(std::string_view text);
  static KnotTable load_file(const std::string& path);
  // Builtin entries overlaid by `path` if given, else by the file named in
  // CURVELACE_KNOT_TABLE if set.
  static KnotTable resolve(const std::optional<std::string>& path);

  // Validates and inserts, replacing an entry of the same name.
  void add(KnotEntry entry);
  void merge(const KnotTable& other);
  const KnotEntry* find(std::string_view name) const;
  const KnotEntry& at(std::string_view name) const;
  const std::vector<KnotEntry>& entries() const { return entries_; }

 private:
  std::vector<KnotEntry> entries_;
};

double ropelength(double length, double radius);
double min_tube_length(const KnotEntry& knot, double tube_diameter);
// Twice the trefoil minimum plus 10 cm per crossing above three.
double recommended_length(const KnotEntry& knot, double tube_diameter);

}  // namespace curvelace
