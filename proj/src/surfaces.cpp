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

#include "curvelace/surfaces.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "curvelace/error.hpp"
#include "curvelace/numerics.hpp"

namespace curvelace {
namespace {

using std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Vec3 {
  double x, y, z;
};

Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Partials {
  Vec3 dr;
  Vec3 dt;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// The printed parametrizations, in parameter units, without domain checks.
Vec3 evaluate(const Shape& shape, double r, double t) {
  return std::visit(
      Overloaded{
          [&](const family::Disc&) -> Vec3 {
            return {r * std::cos(t), r * std::sin(t), 0.0};
          },
          [&](const family::Sphere& s) -> Vec3 {
            const double S = s.radius;
            const double rho = S * std::sin(r / S);
            return {rho * std::cos(t), rho * std::sin(t), S * std::cos(r / S)};
          },
          [&](const family::Hyperbolic&) -> Vec3 {
            throw Error(ErrorCode::kNoEmbedding, "no embedding available");
          },
          [&](const family::Enneper& e) -> Vec3 {
            const int m = 2 * e.n - 1;
            const double rm = std::pow(r, m) / m;
            return {r * std::cos(t) - rm * std::cos(m * t),
                    r * std::sin(t) + rm * std::sin(m * t),
                    2.0 * std::pow(r, e.n) / e.n * std::cos(e.n * t)};
          },
          [&](const family::Richmond& e) -> Vec3 {
            const int m = 2 * e.n + 1;
            const double rm = std::pow(r, m) / m;
            return {-std::cos(t) / r - rm * std::cos(m * t),
                    -std::sin(t) / r - rm * std::sin(m * t),
                    2.0 * std::pow(r, e.n) / e.n * std::cos(e.n * t)};
          },
          [&](const family::Bour&) -> Vec3 {
            return {r * std::cos(t) - 0.5 * r * r * std::cos(2.0 * t),
                    -r * std::sin(t) - 0.5 * r * r * std::sin(2.0 * t),
                    4.0 / 3.0 * std::pow(r, 1.5) * std::cos(1.5 * t)};
          },
          [&](const family::Catenoid& c) -> Vec3 {
            const double rho = std::hypot(c.neck, r);
            return {rho * std::cos(t), rho * std::sin(t),
                    c.neck * std::asinh(r / c.neck)};
          },
          [&](const family::Helicoid& h) -> Vec3 {
            return {r * std::cos(t), r * std::sin(t), h.pitch * t};
          },
          [&](const family::MobiusRuled&) -> Vec3 {
            const double rho = 1.0 + r * std::cos(t);
            return {rho * std::cos(2.0 * t), rho * std::sin(2.0 * t),
                    r * std::sin(t)};
          },
      },
      shape);
}

// Hand-differentiated tangents of the parametrizations above.
Partials partials(const Shape& shape, double r, double t) {
  return std::visit(
      Overloaded{
          [&](const family::Disc&) -> Partials {
            return {{std::cos(t), std::sin(t), 0.0},
                    {-r * std::sin(t), r * std::cos(t), 0.0}};
          },
          [&](const family::Sphere& s) -> Partials {
            const double S = s.radius;
            const double c = std::cos(r / S);
            const double rho = S * std::sin(r / S);
            return {{c * std::cos(t), c * std::sin(t), -std::sin(r / S)},
                    {-rho * std::sin(t), rho * std::cos(t), 0.0}};
          },
          [&](const family::Hyperbolic& h) -> Partials {
            // Geodesic polar coordinates: E = 1, G = S^2 sinh^2(r/S). Only the
            // lengths are meaningful; the vectors are a planar stand-in.
            const double rho = h.radius * std::sinh(r / h.radius);
            return {{std::cos(t), std::sin(t), 0.0},
                    {-rho * std::sin(t), rho * std::cos(t), 0.0}};
          },
          [&](const family::Enneper& e) -> Partials {
            const int m = 2 * e.n - 1;
            const double a = std::pow(r, m - 1);
            const double b = std::pow(r, m);
            const double zn = 2.0 * std::pow(r, e.n - 1);
            return {{std::cos(t) - a * std::cos(m * t),
                     std::sin(t) + a * std::sin(m * t),
                     zn * std::cos(e.n * t)},
                    {-r * std::sin(t) + b * std::sin(m * t),
                     r * std::cos(t) + b * std::cos(m * t),
                     -zn * r * std::sin(e.n * t)}};
          },
          [&](const family::Richmond& e) -> Partials {
            const int m = 2 * e.n + 1;
            const double a = std::pow(r, m - 1);
            const double b = std::pow(r, m);
            const double zn = 2.0 * std::pow(r, e.n - 1);
            return {{std::cos(t) / (r * r) - a * std::cos(m * t),
                     std::sin(t) / (r * r) - a * std::sin(m * t),
                     zn * std::cos(e.n * t)},
                    {std::sin(t) / r + b * std::sin(m * t),
                     -std::cos(t) / r - b * std::cos(m * t),
                     -zn * r * std::sin(e.n * t)}};
          },
          [&](const family::Bour&) -> Partials {
            const double sr = std::sqrt(r);
            return {{std::cos(t) - r * std::cos(2.0 * t),
                     -std::sin(t) - r * std::sin(2.0 * t),
                     2.0 * sr * std::cos(1.5 * t)},
                    {-r * std::sin(t) + r * r * std::sin(2.0 * t),
                     -r * std::cos(t) - r * r * std::cos(2.0 * t),
                     -2.0 * r * sr * std::sin(1.5 * t)}};
          },
          [&](const family::Catenoid& c) -> Partials {
            const double rho = std::hypot(c.neck, r);
            return {{r / rho * std::cos(t), r / rho * std::sin(t), c.neck / rho},
                    {-rho * std::sin(t), rho * std::cos(t), 0.0}};
          },
          [&](const family::Helicoid& h) -> Partials {
            return {{std::cos(t), std::sin(t), 0.0},
                    {-r * std::sin(t), r * std::cos(t), h.pitch}};
          },
          [&](const family::MobiusRuled&) -> Partials {
            const double rho = 1.0 + r * std::cos(t);
            const double c2 = std::cos(2.0 * t);
            const double s2 = std::sin(2.0 * t);
            return {{std::cos(t) * c2, std::cos(t) * s2, std::sin(t)},
                    {-r * std::sin(t) * c2 - 2.0 * rho * s2,
                     -r * std::sin(t) * s2 + 2.0 * rho * c2,
                     r * std::cos(t)}};
          },
      },
      shape);
}

void check_radius(const SurfaceSpec& spec, double r) {
  const ParamInterval d = radial_domain(spec);
  const double slack = 1e-12 * std::max(1.0, std::abs(r));
  if (!std::isfinite(r) || r < d.lo - slack || r > d.hi + slack)
    throw Error(ErrorCode::kOutOfDomain, "parameter out of domain");
}

void check_point(const SurfaceSpec& spec, double r, double t) {
  check_radius(spec, r);
  if (!std::isfinite(t))
    throw Error(ErrorCode::kOutOfDomain, "parameter out of domain");
  // Angles are periodic for every family except the finite helicoid strip.
  if (std::holds_alternative<family::Helicoid>(spec.shape)) {
    const double slack = 1e-9 * std::max(1.0, theta_period(spec));
    if (t < -slack || t > theta_period(spec) + slack)
      throw Error(ErrorCode::kOutOfDomain, "parameter out of domain");
  }
}

numerics::QuadratureOptions profile_quadrature() {
  numerics::QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = 1e-13;
  return o;
}

}  // namespace

void validate(const SurfaceSpec& spec) {
  require(positive_finite(spec.scale), "scale must be positive");
  std::visit(
      Overloaded{
          [](const family::Disc&) {},
          [](const family::Sphere& s) {
            require(positive_finite(s.radius), "sphere radius must be positive");
          },
          [](const family::Hyperbolic& h) {
            require(positive_finite(h.radius),
                    "hyperbolic radius must be positive");
          },
          [](const family::Enneper& e) {
            require(e.n >= 2, "Enneper n must be >= 2 (n = 1 is the disc)");
          },
          [](const family::Richmond& e) {
            require(e.n >= 1, "Richmond n must be >= 1");
            require(positive_finite(e.r_min) && positive_finite(e.r_max),
                    "Richmond radii must be positive");
            require(e.r_min <= e.r_max, "Richmond r_min must not exceed r_max");
          },
          [](const family::Bour& b) {
            require(positive_finite(b.r_max) && b.r_max <= 1.0,
                    "Bour r_max must lie in (0, 1]");
          },
          [](const family::Catenoid& c) {
            require(positive_finite(c.neck), "catenoid neck must be positive");
            require(positive_finite(c.r_max), "catenoid r_max must be positive");
          },
          [](const family::Helicoid& h) {
            require(positive_finite(h.pitch), "helicoid pitch must be positive");
            require(h.turns >= 1, "helicoid turns must be >= 1");
            require(positive_finite(h.r_max), "helicoid r_max must be positive");
          },
          [](const family::MobiusRuled& m) {
            require(positive_finite(m.half_width) && m.half_width < 1.0,
                    "Moebius half-width must lie in (0, 1)");
          },
      },
      spec.shape);
}

std::string_view family_name(const SurfaceSpec& spec) {
  return std::visit(
      Overloaded{
          [](const family::Disc&) { return std::string_view("disc"); },
          [](const family::Sphere&) { return std::string_view("sphere"); },
          [](const family::Hyperbolic&) { return std::string_view("hyperbolic"); },
          [](const family::Enneper&) { return std::string_view("enneper"); },
          [](const family::Richmond&) { return std::string_view("richmond"); },
          [](const family::Bour&) { return std::string_view("bour"); },
          [](const family::Catenoid&) { return std::string_view("catenoid"); },
          [](const family::Helicoid&) { return std::string_view("helicoid"); },
          [](const family::MobiusRuled&) { return std::string_view("mobius"); },
      },
      spec.shape);
}

bool has_embedding(const SurfaceSpec& spec) {
  return !std::holds_alternative<family::Hyperbolic>(spec.shape);
}

ParamInterval radial_domain(const SurfaceSpec& spec) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(
      Overloaded{
          [](const family::Disc&) { return ParamInterval{0.0, inf}; },
          [](const family::Sphere& s) { return ParamInterval{0.0, pi * s.radius}; },
          [](const family::Hyperbolic&) { return ParamInterval{0.0, inf}; },
          [](const family::Enneper&) { return ParamInterval{0.0, inf}; },
          [](const family::Richmond& e) { return ParamInterval{e.r_min, e.r_max}; },
          [](const family::Bour& b) { return ParamInterval{0.0, b.r_max}; },
          [](const family::Catenoid& c) { return ParamInterval{-c.r_max, c.r_max}; },
          [](const family::Helicoid& h) { return ParamInterval{-h.r_max, h.r_max}; },
          [](const family::MobiusRuled& m) {
            return ParamInterval{-m.half_width, m.half_width};
          },
      },
      spec.shape);
}

double theta_period(const SurfaceSpec& spec) {
  if (std::holds_alternative<family::Bour>(spec.shape)) return 4.0 * pi;
  if (const auto* h = std::get_if<family::Helicoid>(&spec.shape))
    return 2.0 * pi * h->turns;
  if (std::holds_alternative<family::MobiusRuled>(spec.shape)) return pi;
  return 2.0 * pi;
}

double radial_anchor(const SurfaceSpec& spec) {
  if (const auto* e = std::get_if<family::Richmond>(&spec.shape)) return e->r_min;
  return 0.0;
}

SurfacePoint point(const SurfaceSpec& spec, double r, double theta) {
  validate(spec);
  if (!has_embedding(spec))
    throw Error(ErrorCode::kNoEmbedding, "no embedding available");
  check_point(spec, r, theta);
  const Vec3 p = spec.scale * evaluate(spec.shape, r, theta);
  return {p.x, p.y, p.z};
}

MetricSample metric(const SurfaceSpec& spec, double r, double theta) {
  validate(spec);
  check_point(spec, r, theta);
  const Partials d = partials(spec.shape, r, theta);
  const double s2 = spec.scale * spec.scale;
  return {s2 * dot(d.dr, d.dr), s2 * dot(d.dr, d.dt), s2 * dot(d.dt, d.dt)};
}

double circumference(const SurfaceSpec& spec, double r) {
  validate(spec);
  check_radius(spec, r);
  const double s = spec.scale;
  return std::visit(
      Overloaded{
          [&](const family::Disc&) { return s * 2.0 * pi * r; },
          [&](const family::Sphere& e) {
            return s * 2.0 * pi * e.radius * std::sin(r / e.radius);
          },
          [&](const family::Hyperbolic& e) {
            return s * 2.0 * pi * e.radius * std::sinh(r / e.radius);
          },
          [&](const family::Enneper& e) {
            return s * 2.0 * pi * (r + std::pow(r, 2 * e.n - 1));
          },
          [&](const family::Richmond& e) {
            return s * 2.0 * pi * (1.0 / r + std::pow(r, 2 * e.n + 1));
          },
          [&](const family::Bour&) { return s * 4.0 * pi * r * (1.0 + r); },
          [&](const family::Catenoid& e) {
            return s * 2.0 * pi * std::hypot(e.neck, r);
          },
          [&](const family::Helicoid& e) {
            return s * 2.0 * pi * e.turns * std::hypot(e.pitch, r);
          },
          [&](const family::MobiusRuled&) { return circumference_numeric(spec, r); },
      },
      spec.shape);
}

double circumference_numeric(const SurfaceSpec& spec, double r) {
  validate(spec);
  check_radius(spec, r);
  double period = theta_period(spec);
  double w = r;
  if (std::holds_alternative<family::MobiusRuled>(spec.shape) && r != 0.0) {
    // sigma(-w, t) = sigma(w, t + pi): the boundary at +-w is one loop.
    period = 2.0 * pi;
    w = std::abs(r);
  }
  const auto speed = [&](double t) {
    const Partials d = partials(spec.shape, w, t);
    return std::sqrt(dot(d.dt, d.dt));
  };
  return spec.scale * numerics::integrate(speed, 0.0, period, profile_quadrature()).value;
}

double radial_arclength(const SurfaceSpec& spec, double r0, double r1) {
  validate(spec);
  check_radius(spec, r0);
  check_radius(spec, r1);
  const auto primitive = [&](double r) {
    return std::visit(
        Overloaded{
            [&](const family::Enneper& e) {
              const int m = 2 * e.n - 1;
              return r + std::pow(r, m) / m;
            },
            [&](const family::Richmond& e) {
              const int m = 2 * e.n + 1;
              return -1.0 / r + std::pow(r, m) / m;
            },
            [&](const family::Bour&) { return r + 0.5 * r * r; },
            [&](const auto&) { return r; },  // E = 1
        },
        spec.shape);
  };
  return spec.scale * (primitive(r1) - primitive(r0));
}

double radial_arclength_numeric(const SurfaceSpec& spec, double r0, double r1) {
  validate(spec);
  check_radius(spec, r0);
  check_radius(spec, r1);
  const double sign = r1 >= r0 ? 1.0 : -1.0;
  const double lo = std::min(r0, r1);
  const double hi = std::max(r0, r1);
  const auto speed = [&](double r) {
    const Partials d = partials(spec.shape, r, 0.0);
    return std::sqrt(dot(d.dr, d.dr));
  };
  return sign * spec.scale *
         numerics::integrate(speed, lo, hi, profile_quadrature()).value;
}

double radius_at_distance(const SurfaceSpec& spec, double from, double distance) {
  validate(spec);
  check_radius(spec, from);
  if (!std::isfinite(distance))
    throw Error(ErrorCode::kInvalidArgument, "distance must be finite");
  if (distance == 0.0) return from;

  const ParamInterval dom = radial_domain(spec);
  const bool outward = distance > 0.0;
  double edge = outward ? dom.hi : dom.lo;
  if (!std::isfinite(edge)) {
    // Unbounded domains have |sigma_r| >= 1 in parameter units.
    edge = from + std::abs(distance) / spec.scale + 1.0;
  }
  const auto residual = [&](double r) {
    return radial_arclength(spec, from, r) - distance;
  };
  const double reach = residual(edge);
  const double slack = 1e-9 * std::max(1.0, std::abs(distance));
  if (outward ? reach < -slack : reach > slack)
    throw Error(ErrorCode::kOutOfDomain, "radius unreachable");
  if (std::abs(reach) <= slack && (outward ? reach < 0 : reach > 0)) return edge;

  const double tol = 1e-12 * std::max(1.0, std::abs(edge));
  return numerics::find_root(residual, std::min(from, edge), std::max(from, edge), tol);
}

double invert_radius(const SurfaceSpec& spec, double intrinsic_radius) {
  if (!(intrinsic_radius >= 0.0))
    throw Error(ErrorCode::kInvalidArgument, "intrinsic radius must be >= 0");
  return radius_at_distance(spec, radial_anchor(spec), intrinsic_radius);
}

double min_circumference_radius(const SurfaceSpec& spec) {
  validate(spec);
  const auto* rich = std::get_if<family::Richmond>(&spec.shape);
  if (rich == nullptr) throw Error(ErrorCode::kNotApplicable, "not applicable");
  if (rich->r_min == rich->r_max) return rich->r_min;
  return numerics::minimize_scalar(
      [&](double r) { return circumference(spec, r); }, rich->r_min,
      rich->r_max, 1e-10);
}

Curvature curvature(const SurfaceSpec& spec, double r, double theta) {
  validate(spec);
  if (!has_embedding(spec)) throw Error(ErrorCode::kNoEmbedding, "no embedding");
  check_point(spec, r, theta);

  constexpr double h1 = 1e-5;
  constexpr double h2 = 1e-4;
  const auto sigma = [&](double u, double v) {
    return spec.scale * evaluate(spec.shape, u, v);
  };
  // Component-wise central differences through numerics::differentiate.
  const auto diff = [](auto&& fn, double x, int order, double step) {
    return Vec3{
        numerics::differentiate([&](double s) { return fn(s).x; }, x, order, step),
        numerics::differentiate([&](double s) { return fn(s).y; }, x, order, step),
        numerics::differentiate([&](double s) { return fn(s).z; }, x, order, step)};
  };
  const auto along_r = [&](double u) { return sigma(u, theta); };
  const auto along_t = [&](double v) { return sigma(r, v); };
  const Vec3 xr = diff(along_r, r, 1, h1);
  const Vec3 xt = diff(along_t, theta, 1, h1);
  const Vec3 xrr = diff(along_r, r, 2, h2);
  const Vec3 xtt = diff(along_t, theta, 2, h2);
  const Vec3 xrt = diff(
      [&](double u) {
        return diff([&](double v) { return sigma(u, v); }, theta, 1, h2);
      },
      r, 1, h2);

  const double E = dot(xr, xr);
  const double F = dot(xr, xt);
  const double G = dot(xt, xt);
  const double det = E * G - F * F;
  if (!(det >= 1e-12)) throw Error(ErrorCode::kNumerical, "degenerate metric");
  const Vec3 nrm_raw = cross(xr, xt);
  const Vec3 nrm = (1.0 / std::sqrt(dot(nrm_raw, nrm_raw))) * nrm_raw;
  const double e = dot(xrr, nrm);
  const double f = dot(xrt, nrm);
  const double g = dot(xtt, nrm);

  Curvature out;
  out.mean = (e * G - 2.0 * f * F + g * E) / (2.0 * det);
  out.gaussian = (e * g - f * f) / det;
  const double disc = std::sqrt(std::max(0.0, out.mean * out.mean - out.gaussian));
  out.kappa1 = out.mean + disc;
  out.kappa2 = out.mean - disc;
  return out;
}

double mean_curvature(const SurfaceSpec& spec, double r, double theta) {
  return curvature(spec, r, theta).mean;
}

double gaussian_curvature(const SurfaceSpec& spec, double r, double theta) {
  return curvature(spec, r, theta).gaussian;
}

}  // namespace curvelace
