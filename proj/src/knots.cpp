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

#include "curvelace/knots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "curvelace/error.hpp"

namespace curvelace {

KnotTable KnotTable::builtin() {
  KnotTable table;
  table.add({"3_1", 3, kTrefoilRopelength});
  for (const char* name : {"4_1"}) table.add({name, 4, std::nullopt});
  for (const char* name : {"5_1", "5_2"}) table.add({name, 5, std::nullopt});
  for (const char* name : {"6_1", "6_2", "6_3"}) table.add({name, 6, std::nullopt});
  for (const char* name : {"7_1", "7_2", "7_3", "7_4", "7_5", "7_6", "7_7"})
    table.add({name, 7, std::nullopt});
  return table;
}

KnotTable KnotTable::parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("knot table: ") + e.what());
  }
  if (!doc.is_array())
    throw Error(ErrorCode::kInvalidArgument, "knot table must be a JSON array");
  KnotTable table;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item.contains("crossings") ||
        !item["name"].is_string() || !item["crossings"].is_number_integer())
      throw Error(ErrorCode::kInvalidArgument,
                  "knot table entries need a string name and integer crossings");
    KnotEntry entry{item["name"].get<std::string>(), item["crossings"].get<int>(),
                    std::nullopt};
    if (item.contains("min_ropelength") && !item["min_ropelength"].is_null()) {
      if (!item["min_ropelength"].is_number())
        throw Error(ErrorCode::kInvalidArgument, "min_ropelength must be a number");
      entry.min_ropelength = item["min_ropelength"].get<double>();
    }
    table.add(std::move(entry));
  }
  return table;
}

KnotTable KnotTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open knot table: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

KnotTable KnotTable::resolve(const std::optional<std::string>& path) {
  KnotTable table = builtin();
  if (path) {
    table.merge(load_file(*path));
  } else if (const char* env = std::getenv(kKnotTableEnv); env != nullptr && *env) {
    table.merge(load_file(env));
  }
  return table;
}

void KnotTable::add(KnotEntry entry) {
  if (entry.name.empty())
    throw Error(ErrorCode::kInvalidArgument, "knot name must not be empty");
  if (entry.crossings < 3)
    throw Error(ErrorCode::kInvalidArgument, "knot " + entry.name + ": crossings must be >= 3");
  if (entry.min_ropelength &&
      !(std::isfinite(*entry.min_ropelength) && *entry.min_ropelength > kRopelengthLowerBound))
    throw Error(ErrorCode::kInvalidArgument,
                "knot " + entry.name + ": min_ropelength must exceed 31.32");
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const KnotEntry& e) { return e.name == entry.name; });
  if (it != entries_.end()) {
    *it = std::move(entry);
  } else {
    entries_.push_back(std::move(entry));
  }
}

void KnotTable::merge(const KnotTable& other) {
  for (const KnotEntry& e : other.entries_) add(e);
}

const KnotEntry* KnotTable::find(std::string_view name) const {
  const auto it = std::find_if(entries_.begin(), entries_.end(),
                               [&](const KnotEntry& e) { return e.name == name; });
  return it == entries_.end() ? nullptr : &*it;
}

const KnotEntry& KnotTable::at(std::string_view name) const {
  const KnotEntry* e = find(name);
  if (e == nullptr)
    throw Error(ErrorCode::kInvalidArgument, "unknown knot: " + std::string(name));
  return *e;
}

double ropelength(double length, double radius) {
  if (!(length > 0.0) || !(radius > 0.0) || !std::isfinite(length) || !std::isfinite(radius))
    throw Error(ErrorCode::kInvalidArgument, "invalid dimensions");
  return length / radius;
}

double min_tube_length(const KnotEntry& knot, double tube_diameter) {
  if (!(tube_diameter > 0.0) || !std::isfinite(tube_diameter))
    throw Error(ErrorCode::kInvalidArgument, "invalid dimensions");
  if (!knot.min_ropelength)
    throw Error(ErrorCode::kNotApplicable, "no bound available for knot " + knot.name);
  return *knot.min_ropelength * (tube_diameter / 2.0);
}

double recommended_length(const KnotEntry& knot, double tube_diameter) {
  if (!(tube_diameter > 0.0) || !std::isfinite(tube_diameter))
    throw Error(ErrorCode::kInvalidArgument, "invalid dimensions");
  if (knot.crossings < 3)
    throw Error(ErrorCode::kInvalidArgument, "crossings must be >= 3");
  const double trefoil = kTrefoilRopelength * (tube_diameter / 2.0);
  return 2.0 * trefoil + kExtraCmPerCrossing * (knot.crossings - 3);
}

}  // namespace curvelace
