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
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "curvelace/emitters.hpp"
#include "curvelace/error.hpp"
#include "curvelace/knots.hpp"
#include "curvelace/pattern.hpp"
#include "curvelace/surfaces.hpp"
#include "curvelace/verify.hpp"

struct cl_surface {
  curvelace::SurfaceSpec spec;
};

struct cl_pattern {
  curvelace::Pattern pattern;
};

struct cl_knot_table {
  curvelace::KnotTable table;
};

namespace {

thread_local std::string last_error;

cl_status to_status(curvelace::ErrorCode code) {
  using curvelace::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return CL_ERR_INVALID_ARGUMENT;
    case ErrorCode::kOutOfDomain: return CL_ERR_OUT_OF_DOMAIN;
    case ErrorCode::kNotApplicable: return CL_ERR_NOT_APPLICABLE;
    case ErrorCode::kNoEmbedding: return CL_ERR_NO_EMBEDDING;
    case ErrorCode::kNumerical: return CL_ERR_NUMERICAL;
    case ErrorCode::kIo: return CL_ERR_IO;
  }
  return CL_ERR_INTERNAL;
}

cl_status fail(cl_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
cl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CL_OK;
  } catch (const curvelace::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CL_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool set(double v) { return !std::isnan(v); }

curvelace::Shape make_shape(const std::string& name, const cl_surface_params& p) {
  namespace fam = curvelace::family;
  if (name == "disc") return fam::Disc{};
  if (name == "sphere") {
    fam::Sphere s;
    if (set(p.radius)) s.radius = p.radius;
    return s;
  }
  if (name == "hyperbolic") {
    fam::Hyperbolic s;
    if (set(p.radius)) s.radius = p.radius;
    return s;
  }
  if (name == "enneper") {
    fam::Enneper s;
    if (p.n != 0) s.n = p.n;
    return s;
  }
  if (name == "richmond") {
    fam::Richmond s;
    if (p.n != 0) s.n = p.n;
    if (set(p.r_min)) s.r_min = p.r_min;
    if (set(p.r_max)) s.r_max = p.r_max;
    return s;
  }
  if (name == "bour") {
    fam::Bour s;
    if (set(p.r_max)) s.r_max = p.r_max;
    return s;
  }
  if (name == "catenoid") {
    fam::Catenoid s;
    if (set(p.c)) s.neck = p.c;
    if (set(p.r_max)) s.r_max = p.r_max;
    return s;
  }
  if (name == "helicoid") {
    fam::Helicoid s;
    if (set(p.c)) s.pitch = p.c;
    if (p.turns != 0) s.turns = p.turns;
    if (set(p.r_max)) s.r_max = p.r_max;
    return s;
  }
  if (name == "mobius" || name == "moebius") {
    fam::MobiusRuled s;
    if (set(p.half_width)) s.half_width = p.half_width;
    return s;
  }
  throw curvelace::Error(curvelace::ErrorCode::kInvalidArgument,
                         "unknown surface family: " + name);
}

}  // namespace

extern "C" {

const char* cl_last_error(void) { return last_error.c_str(); }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK: return "ok";
    case CL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CL_ERR_OUT_OF_DOMAIN: return "out of domain";
    case CL_ERR_NOT_APPLICABLE: return "not applicable";
    case CL_ERR_NO_EMBEDDING: return "no embedding";
    case CL_ERR_NUMERICAL: return "numerical failure";
    case CL_ERR_IO: return "i/o error";
    case CL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void cl_string_free(char* s) { std::free(s); }

void cl_surface_params_init(cl_surface_params* params) {
  if (params == nullptr) return;
  const double nan = std::nan("");
  *params = cl_surface_params{0, nan, nan, nan, nan, 0, nan, 1.0};
}

cl_status cl_surface_create(const char* family, const cl_surface_params* params,
                            cl_surface** out) {
  if (family == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    cl_surface_params p;
    cl_surface_params_init(&p);
    if (params != nullptr) p = *params;
    curvelace::SurfaceSpec spec{make_shape(family, p), set(p.scale) ? p.scale : 1.0};
    curvelace::validate(spec);
    *out = new cl_surface{spec};
  });
}

void cl_surface_destroy(cl_surface* surface) { delete surface; }

cl_status cl_surface_point(const cl_surface* surface, double r, double theta,
                           double xyz[3]) {
  if (surface == nullptr || xyz == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto p = curvelace::point(surface->spec, r, theta);
    xyz[0] = p.x;
    xyz[1] = p.y;
    xyz[2] = p.z;
  });
}

cl_status cl_surface_circumference(const cl_surface* surface, double r,
                                   double* out) {
  if (surface == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = curvelace::circumference(surface->spec, r); });
}

cl_status cl_surface_invert_radius(const cl_surface* surface,
                                   double intrinsic_radius, double* out) {
  if (surface == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = curvelace::invert_radius(surface->spec, intrinsic_radius); });
}

cl_status cl_surface_curvature(const cl_surface* surface, double r, double theta,
                               double* mean, double* gaussian) {
  if (surface == nullptr) return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto k = curvelace::curvature(surface->spec, r, theta);
    if (mean != nullptr) *mean = k.mean;
    if (gaussian != nullptr) *gaussian = k.gaussian;
  });
}

cl_status cl_surface_export_obj(const cl_surface* surface, int r_samples,
                                int theta_samples, const double* r_lo,
                                const double* r_hi, char** out) {
  if (surface == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    curvelace::MeshSampling sampling;
    sampling.r_samples = r_samples;
    sampling.theta_samples = theta_samples;
    if (r_lo != nullptr) sampling.r_lo = *r_lo;
    if (r_hi != nullptr) sampling.r_hi = *r_hi;
    *out = copy_string(curvelace::export_obj(surface->spec, sampling));
  });
}

cl_status cl_pattern_compile(const cl_surface* surface, double stitch_width,
                             double stitch_height,
                             const cl_compile_options* options,
                             cl_pattern** out) {
  if (surface == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    curvelace::CompileOptions opts;
    if (options != nullptr) {
      if (options->rounds < 0)
        throw curvelace::Error(curvelace::ErrorCode::kInvalidArgument,
                               "round count must be positive");
      if (options->rounds > 0) opts.rounds = options->rounds;
      if (options->stop_radius > 0) opts.stop_radius = options->stop_radius;
    }
    const curvelace::Gauge gauge{stitch_width, stitch_height};
    *out = new cl_pattern{curvelace::compile(surface->spec, gauge, opts)};
  });
}

void cl_pattern_destroy(cl_pattern* pattern) { delete pattern; }

size_t cl_pattern_round_count(const cl_pattern* pattern) {
  return pattern == nullptr ? 0 : pattern->pattern.rounds.size();
}

long cl_pattern_total_stitches(const cl_pattern* pattern) {
  return pattern == nullptr ? 0 : pattern->pattern.total_stitches;
}

cl_status cl_pattern_round(const cl_pattern* pattern, size_t position,
                           cl_round_info* out) {
  if (pattern == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  if (position >= pattern->pattern.rounds.size())
    return fail(CL_ERR_OUT_OF_DOMAIN, "round position out of range");
  const auto& r = pattern->pattern.rounds[position];
  *out = cl_round_info{r.index, r.stitches, r.delta, r.parent,
                       r.intrinsic_radius, r.circumference};
  last_error.clear();
  return CL_OK;
}

cl_status cl_pattern_render(const cl_pattern* pattern, cl_format format,
                            char** out) {
  if (pattern == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const auto& p = pattern->pattern;
    switch (format) {
      case CL_FORMAT_TEXT: *out = copy_string(curvelace::render_text(p)); return;
      case CL_FORMAT_JSON: *out = copy_string(curvelace::render_json(p)); return;
      case CL_FORMAT_CSV: *out = copy_string(curvelace::render_csv(p)); return;
      case CL_FORMAT_GRAPH:
        *out = copy_string(curvelace::export_graph(curvelace::build_stitch_graph(p)));
        return;
    }
    throw curvelace::Error(curvelace::ErrorCode::kInvalidArgument,
                           "unknown output format");
  });
}

cl_status cl_knot_table_create(const char* path, cl_knot_table** out) {
  if (out == nullptr) return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<std::string> p;
    if (path != nullptr) p = path;
    *out = new cl_knot_table{curvelace::KnotTable::resolve(p)};
  });
}

void cl_knot_table_destroy(cl_knot_table* table) { delete table; }

cl_status cl_knot_crossings(const cl_knot_table* table, const char* name,
                            int* out) {
  if (table == nullptr || name == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = table->table.at(name).crossings; });
}

cl_status cl_knot_min_tube_length(const cl_knot_table* table, const char* name,
                                  double tube_diameter, double* out) {
  if (table == nullptr || name == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = curvelace::min_tube_length(table->table.at(name), tube_diameter);
  });
}

cl_status cl_knot_recommended_length(const cl_knot_table* table,
                                     const char* name, double tube_diameter,
                                     double* out) {
  if (table == nullptr || name == nullptr || out == nullptr)
    return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = curvelace::recommended_length(table->table.at(name), tube_diameter);
  });
}

cl_status cl_ropelength(double length, double radius, double* out) {
  if (out == nullptr) return fail(CL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = curvelace::ropelength(length, radius); });
}

cl_status cl_verify(char** report, int* failures) {
  if (report != nullptr) *report = nullptr;
  return guarded([&] {
    const auto result = curvelace::run_verification();
    if (failures != nullptr) *failures = result.failures();
    if (report != nullptr) *report = copy_string(result.to_text());
  });
}

}  // extern "C"
