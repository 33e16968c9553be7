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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "curvelace/error.hpp"

namespace curvelace {
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

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(Ropelength, TwoFeetOfOneInchRope) {
  EXPECT_DOUBLE_EQ(ropelength(30.48, 1.27), 24.0);
  EXPECT_EQ(code_of([] { ropelength(1.0, 0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { ropelength(-1.0, 1.0); }), ErrorCode::kInvalidArgument);
}

TEST(TubeLength, TrefoilMinimum) {
  const KnotTable table = KnotTable::builtin();
  const KnotEntry& trefoil = table.at("3_1");
  EXPECT_EQ(trefoil.crossings, 3);
  // 32.74 * 0.4 cm radius.
  EXPECT_NEAR(min_tube_length(trefoil, 0.8), 13.096, 1e-12);
  EXPECT_NEAR(recommended_length(trefoil, 0.8), 26.192, 1e-12);
}

TEST(TubeLength, TenCentimetresPerExtraCrossing) {
  const KnotTable table = KnotTable::builtin();
  EXPECT_NEAR(recommended_length(table.at("4_1"), 0.8), 36.192, 1e-12);
  EXPECT_NEAR(recommended_length(table.at("5_2"), 0.8), 46.192, 1e-12);
  EXPECT_NEAR(recommended_length(table.at("7_4"), 1.0), 2 * 32.74 * 0.5 + 40.0, 1e-12);
}

TEST(TubeLength, MissingBoundAndUnknownKnot) {
  const KnotTable table = KnotTable::builtin();
  EXPECT_EQ(code_of([&] { min_tube_length(table.at("5_1"), 0.8); }), ErrorCode::kNotApplicable);
  EXPECT_EQ(code_of([&] { table.at("9_42"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { min_tube_length(table.at("3_1"), 0.0); }),
            ErrorCode::kInvalidArgument);
}

TEST(KnotTable, ParseAndMerge) {
  KnotTable table = KnotTable::builtin();
  table.merge(KnotTable::parse_json(
      R"([{"name": "4_1", "crossings": 4, "min_ropelength": 42.09},
          {"name": "8_19", "crossings": 8}])"));
  EXPECT_NEAR(min_tube_length(table.at("4_1"), 1.0), 21.045, 1e-12);
  EXPECT_EQ(table.at("8_19").crossings, 8);
  EXPECT_FALSE(table.at("8_19").min_ropelength.has_value());
}

TEST(KnotTable, RejectsBadEntries) {
  EXPECT_EQ(code_of([] { KnotTable::parse_json("{not json"); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { KnotTable::parse_json(R"({"name": "3_1"})"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] {
              KnotTable::parse_json(R"([{"name": "x", "crossings": 3, "min_ropelength": 30}])");
            }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { KnotTable::parse_json(R"([{"name": "x", "crossings": 2}])"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { KnotTable::load_file("/nonexistent/knots.json"); }), ErrorCode::kIo);
}

TEST(KnotTable, ResolvesFromPathOrEnvironment) {
  const auto path = write_temp("curvelace_knots_test.json",
                               R"([{"name": "5_1", "crossings": 5, "min_ropelength": 47.2}])");
  EXPECT_TRUE(KnotTable::resolve(path.string()).at("5_1").min_ropelength.has_value());
  ::setenv(kKnotTableEnv, path.c_str(), 1);
  EXPECT_TRUE(KnotTable::resolve(std::nullopt).at("5_1").min_ropelength.has_value());
  ::unsetenv(kKnotTableEnv);
  EXPECT_FALSE(KnotTable::resolve(std::nullopt).at("5_1").min_ropelength.has_value());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace curvelace
