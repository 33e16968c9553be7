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

/* C interface to the curvelace pattern compiler.
 *
 * Objects are opaque handles released with the matching destroy call. Every
 * fallible call returns a cl_status; on failure cl_last_error() holds a
 * message for the calling thread. Strings returned through char** are
 * heap-allocated and must be released with cl_string_free(). */
#ifndef CURVELACE_H_
#define CURVELACE_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CURVELACE_BUILDING)
#    define CURVELACE_API __declspec(dllexport)
#  else
#    define CURVELACE_API __declspec(dllimport)
#  endif
#else
#  define CURVELACE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_INVALID_ARGUMENT = 1,
  CL_ERR_OUT_OF_DOMAIN = 2,
  CL_ERR_NOT_APPLICABLE = 3,
  CL_ERR_NO_EMBEDDING = 4,
  CL_ERR_NUMERICAL = 5,
  CL_ERR_IO = 6,
  CL_ERR_INTERNAL = 7
} cl_status;

typedef enum cl_format {
  CL_FORMAT_TEXT = 0,
  CL_FORMAT_JSON = 1,
  CL_FORMAT_CSV = 2,
  CL_FORMAT_GRAPH = 3 /* stitch graph JSON */
} cl_format;

typedef struct cl_surface cl_surface;
typedef struct cl_pattern cl_pattern;
typedef struct cl_knot_table cl_knot_table;

/* Unset fields (NaN reals, zero integers) take the family default. */
typedef struct cl_surface_params {
  int n;             /* Enneper / Richmond symmetry */
  double radius;     /* sphere / hyperbolic S */
  double r_min;      /* Richmond */
  double r_max;      /* Richmond, Bour, catenoid, helicoid */
  double c;          /* catenoid neck, helicoid pitch */
  int turns;         /* helicoid */
  double half_width; /* Moebius band */
  double scale;      /* cm per parameter unit, default 1 */
} cl_surface_params;

typedef struct cl_compile_options {
  int rounds;         /* 0: unset */
  double stop_radius; /* cm; <= 0: unset */
} cl_compile_options;

typedef struct cl_round_info {
  int index;
  int stitches;
  int delta;
  int parent; /* position of the parent round, -1 for the first */
  double intrinsic_radius;
  double circumference;
} cl_round_info;

CURVELACE_API const char* cl_last_error(void);
CURVELACE_API const char* cl_status_name(cl_status status);
CURVELACE_API void cl_string_free(char* s);

CURVELACE_API void cl_surface_params_init(cl_surface_params* params);
/* family: disc, sphere, hyperbolic, enneper, richmond, bour, catenoid,
 * helicoid, mobius. */
CURVELACE_API cl_status cl_surface_create(const char* family,
                                          const cl_surface_params* params,
                                          cl_surface** out);
CURVELACE_API void cl_surface_destroy(cl_surface* surface);
CURVELACE_API cl_status cl_surface_point(const cl_surface* surface, double r,
                                         double theta, double xyz[3]);
CURVELACE_API cl_status cl_surface_circumference(const cl_surface* surface,
                                                 double r, double* out);
CURVELACE_API cl_status cl_surface_invert_radius(const cl_surface* surface,
                                                 double intrinsic_radius,
                                                 double* out);
CURVELACE_API cl_status cl_surface_curvature(const cl_surface* surface,
                                             double r, double theta,
                                             double* mean, double* gaussian);
/* r_lo / r_hi may be NULL for the family's default range. */
CURVELACE_API cl_status cl_surface_export_obj(const cl_surface* surface,
                                              int r_samples, int theta_samples,
                                              const double* r_lo,
                                              const double* r_hi, char** out);

CURVELACE_API cl_status cl_pattern_compile(const cl_surface* surface,
                                           double stitch_width,
                                           double stitch_height,
                                           const cl_compile_options* options,
                                           cl_pattern** out);
CURVELACE_API void cl_pattern_destroy(cl_pattern* pattern);
CURVELACE_API size_t cl_pattern_round_count(const cl_pattern* pattern);
CURVELACE_API long cl_pattern_total_stitches(const cl_pattern* pattern);
CURVELACE_API cl_status cl_pattern_round(const cl_pattern* pattern,
                                         size_t position, cl_round_info* out);
CURVELACE_API cl_status cl_pattern_render(const cl_pattern* pattern,
                                          cl_format format, char** out);

/* path may be NULL: then CURVELACE_KNOT_TABLE is consulted, if set. */
CURVELACE_API cl_status cl_knot_table_create(const char* path,
                                             cl_knot_table** out);
CURVELACE_API void cl_knot_table_destroy(cl_knot_table* table);
CURVELACE_API cl_status cl_knot_crossings(const cl_knot_table* table,
                                          const char* name, int* out);
CURVELACE_API cl_status cl_knot_min_tube_length(const cl_knot_table* table,
                                                const char* name,
                                                double tube_diameter,
                                                double* out);
CURVELACE_API cl_status cl_knot_recommended_length(const cl_knot_table* table,
                                                   const char* name,
                                                   double tube_diameter,
                                                   double* out);
CURVELACE_API cl_status cl_ropelength(double length, double radius, double* out);

/* Runs the built-in cross-checks. */
CURVELACE_API cl_status cl_verify(char** report, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* CURVELACE_H_ */
