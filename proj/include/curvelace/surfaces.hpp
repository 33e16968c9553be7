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

#include <string>
#include <string_view>
#include <variant>

namespace curvelace {

// Surface families. Dimensional parameters are in parameter units; the
// enclosing SurfaceSpec::scale converts parameter units to centimetres.
namespace family {

struct Disc {};

// Round sphere of radius S, parametrized by geodesic distance from a pole.
struct Sphere {
  double radius = 1.0;
};

// Constant curvature -1/S^2. Profile-only: there is no embedding.
struct Hyperbolic {
  double radius = 1.0;
};

struct Enneper {
  int n = 2;  // rotational symmetry, n >= 2
};

struct Richmond {
  int n = 1;
  double r_min = 0.3;
  double r_max = 2.0;
};

struct Bour {
  double r_max = 1.0;  // <= 1
};

// Catenoid parametrized by signed intrinsic distance r from the neck circle.
struct Catenoid {
  double neck = 1.0;  // c
  double r_max = 2.0;
};

// Right helicoid (r cos t, r sin t, c t); r is the signed axis distance.
struct Helicoid {
  double pitch = 1.0;  // c
  int turns = 1;
  double r_max = 2.0;
};

// Ruled Moebius band ((1 + r cos t) cos 2t, (1 + r cos t) sin 2t, r sin t),
// t in [0, pi], r in [-half_width, half_width].
struct MobiusRuled {
  double half_width = 0.5;
};

}  // namespace family

using Shape = std::variant<family::Disc, family::Sphere, family::Hyperbolic,
                           family::Enneper, family::Richmond, family::Bour,
                           family::Catenoid, family::Helicoid,
                           family::MobiusRuled>;

struct SurfaceSpec {
  Shape shape;
  double scale = 1.0;  // cm per parameter unit
};

struct SurfacePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// First fundamental form coefficients in cm^2.
struct MetricSample {
  double E = 0.0;
  double F = 0.0;
  double G = 0.0;
};

struct Curvature {
  double mean = 0.0;      // half the sum of principal curvatures
  double gaussian = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
};

struct ParamInterval {
  double lo;
  double hi;  // may be +infinity
};

// Throws Error(kInvalidArgument) on bad parameters.
void validate(const SurfaceSpec& spec);

std::string_view family_name(const SurfaceSpec& spec);
bool has_embedding(const SurfaceSpec& spec);

ParamInterval radial_domain(const SurfaceSpec& spec);
// Length of the theta interval a closed round sweeps: 2pi, 4pi for Bour,
// 2pi*turns for the helicoid, pi for the Moebius band.
double theta_period(const SurfaceSpec& spec);
// Radius at which plans start (r_min for Richmond, the neck/axis for
// catenoid/helicoid, otherwise 0).
double radial_anchor(const SurfaceSpec& spec);

SurfacePoint point(const SurfaceSpec& spec, double r, double theta);
MetricSample metric(const SurfaceSpec& spec, double r, double theta);

// Length in cm of the closed curve at fixed r. For the Moebius band with
// r != 0 this is the single boundary curve of the band of half-width |r|,
// which sweeps theta over [0, 2pi]; at r = 0 it is the centre circle.
double circumference(const SurfaceSpec& spec, double r);
// Same, by adaptive quadrature of sqrt(G) over the theta range.
double circumference_numeric(const SurfaceSpec& spec, double r);

// Signed intrinsic distance in cm from r0 to r1 along a fixed-theta curve.
double radial_arclength(const SurfaceSpec& spec, double r0, double r1);
double radial_arclength_numeric(const SurfaceSpec& spec, double r0, double r1);

// Parameter r at signed intrinsic distance `distance` (cm) from `from`.
// Throws Error(kOutOfDomain, "radius unreachable") past the domain edge.
double radius_at_distance(const SurfaceSpec& spec, double from, double distance);
// r with radial_arclength(anchor, r) == R.
double invert_radius(const SurfaceSpec& spec, double intrinsic_radius);

// Richmond only: radius of the shortest round on [r_min, r_max].
double min_circumference_radius(const SurfaceSpec& spec);

// Finite-difference curvature of the embedding, in 1/cm.
Curvature curvature(const SurfaceSpec& spec, double r, double theta);
double mean_curvature(const SurfaceSpec& spec, double r, double theta);
double gaussian_curvature(const SurfaceSpec& spec, double r, double theta);

}  // namespace curvelace
