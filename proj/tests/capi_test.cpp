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

#include "curvelace/curvelace.h"

#include <cmath>
#include <string>

#include <gtest/gtest.h>

namespace {

struct Surface {
  cl_surface* ptr = nullptr;
  ~Surface() { cl_surface_destroy(ptr); }
};

struct Pattern {
  cl_pattern* ptr = nullptr;
  ~Pattern() { cl_pattern_destroy(ptr); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  cl_string_free(s);
  return out;
}

TEST(CApi, CompileAndRender) {
  Surface s;
  ASSERT_EQ(cl_surface_create("disc", nullptr, &s.ptr), CL_OK);
  cl_compile_options o{3, 0.0};
  Pattern p;
  ASSERT_EQ(cl_pattern_compile(s.ptr, 0.5, 0.5, &o, &p.ptr), CL_OK);
  EXPECT_EQ(cl_pattern_round_count(p.ptr), 3u);
  EXPECT_EQ(cl_pattern_total_stitches(p.ptr), 38);
  cl_round_info info;
  ASSERT_EQ(cl_pattern_round(p.ptr, 1, &info), CL_OK);
  EXPECT_EQ(info.stitches, 13);
  EXPECT_EQ(info.delta, 7);
  EXPECT_EQ(info.parent, 0);
  EXPECT_EQ(cl_pattern_round(p.ptr, 3, &info), CL_ERR_OUT_OF_DOMAIN);

  char* csv = nullptr;
  ASSERT_EQ(cl_pattern_render(p.ptr, CL_FORMAT_CSV, &csv), CL_OK);
  EXPECT_EQ(take(csv), "l,delta_N,N\n1,,6\n2,7,13\n3,6,19\ntotal,,38\n");
  for (cl_format f : {CL_FORMAT_TEXT, CL_FORMAT_JSON, CL_FORMAT_GRAPH}) {
    char* out = nullptr;
    EXPECT_EQ(cl_pattern_render(p.ptr, f, &out), CL_OK);
    EXPECT_FALSE(take(out).empty());
  }
}

TEST(CApi, SurfaceQueries) {
  cl_surface_params params;
  cl_surface_params_init(&params);
  EXPECT_TRUE(std::isnan(params.radius));
  EXPECT_EQ(params.scale, 1.0);
  params.n = 2;
  Surface s;
  ASSERT_EQ(cl_surface_create("enneper", &params, &s.ptr), CL_OK);
  double c = 0.0;
  ASSERT_EQ(cl_surface_circumference(s.ptr, 1.0, &c), CL_OK);
  EXPECT_NEAR(c, 4 * M_PI, 1e-12);
  double r = 0.0;
  ASSERT_EQ(cl_surface_invert_radius(s.ptr, 1.0, &r), CL_OK);
  EXPECT_NEAR(r, 0.81773, 1e-5);
  double xyz[3];
  ASSERT_EQ(cl_surface_point(s.ptr, 1.0, 0.0, xyz), CL_OK);
  EXPECT_NEAR(xyz[2], 1.0, 1e-14);
  double mean = 1.0, gauss = 1.0;
  ASSERT_EQ(cl_surface_curvature(s.ptr, 0.5, 0.3, &mean, &gauss), CL_OK);
  EXPECT_NEAR(mean, 0.0, 1e-4);
  EXPECT_LT(gauss, 0.0);
  char* obj = nullptr;
  const double hi = 1.2;
  ASSERT_EQ(cl_surface_export_obj(s.ptr, 3, 4, nullptr, &hi, &obj), CL_OK);
  EXPECT_EQ(take(obj).rfind("# curvelace mesh", 0), 0u);
}

TEST(CApi, ErrorsCarryMessages) {
  Surface s;
  EXPECT_EQ(cl_surface_create("blob", nullptr, &s.ptr), CL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(s.ptr, nullptr);
  EXPECT_NE(std::string(cl_last_error()).find("blob"), std::string::npos);

  ASSERT_EQ(cl_surface_create("hyperbolic", nullptr, &s.ptr), CL_OK);
  double xyz[3];
  EXPECT_EQ(cl_surface_point(s.ptr, 0.5, 0.0, xyz), CL_ERR_NO_EMBEDDING);

  Pattern p;
  EXPECT_EQ(cl_pattern_compile(s.ptr, 0.0, 1.0, nullptr, &p.ptr), CL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(p.ptr, nullptr);
  EXPECT_EQ(cl_pattern_compile(nullptr, 0.5, 0.5, nullptr, &p.ptr), CL_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(cl_status_name(CL_ERR_NOT_APPLICABLE), "not applicable");

  Surface bour;
  ASSERT_EQ(cl_surface_create("bour", nullptr, &bour.ptr), CL_OK);
  cl_compile_options o{20, 0.0};
  EXPECT_EQ(cl_pattern_compile(bour.ptr, 0.5, 0.5, &o, &p.ptr), CL_ERR_OUT_OF_DOMAIN);
}

TEST(CApi, Knots) {
  cl_knot_table* t = nullptr;
  ASSERT_EQ(cl_knot_table_create(nullptr, &t), CL_OK);
  double len = 0.0;
  EXPECT_EQ(cl_knot_min_tube_length(t, "3_1", 0.8, &len), CL_OK);
  EXPECT_NEAR(len, 13.096, 1e-12);
  EXPECT_EQ(cl_knot_recommended_length(t, "4_1", 0.8, &len), CL_OK);
  EXPECT_NEAR(len, 36.192, 1e-12);
  EXPECT_EQ(cl_knot_min_tube_length(t, "4_1", 0.8, &len), CL_ERR_NOT_APPLICABLE);
  int crossings = 0;
  EXPECT_EQ(cl_knot_crossings(t, "7_7", &crossings), CL_OK);
  EXPECT_EQ(crossings, 7);
  EXPECT_EQ(cl_knot_crossings(t, "nope", &crossings), CL_ERR_INVALID_ARGUMENT);
  cl_knot_table_destroy(t);
  EXPECT_EQ(cl_knot_table_create("/nonexistent.json", &t), CL_ERR_IO);
  double rl = 0.0;
  EXPECT_EQ(cl_ropelength(30.48, 1.27, &rl), CL_OK);
  EXPECT_DOUBLE_EQ(rl, 24.0);
}

TEST(CApi, Verify) {
  char* report = nullptr;
  int failures = -1;
  ASSERT_EQ(cl_verify(&report, &failures), CL_OK);
  EXPECT_EQ(failures, 0);
  EXPECT_NE(take(report).find("all checks passed"), std::string::npos);
}

}  // namespace
