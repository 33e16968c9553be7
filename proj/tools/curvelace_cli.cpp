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

// Command-line front end. Links only the C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "curvelace/curvelace.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Reads --config files: a flat JSON object keyed by long flag names of the
// subcommand being run.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(const CLI::App* app) : app_(app) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return {};
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw CLI::ConversionError("config: expected a JSON object");
    const auto active = app_->get_subcommands();
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      if (!active.empty()) item.parents = {active.front()->get_name()};
      item.name = key;
      for (char& c : item.name)
        if (c == '_') c = '-';
      if (value.is_boolean())
        item.inputs = {value.get<bool>() ? "true" : "false"};
      else if (value.is_string())
        item.inputs = {value.get<std::string>()};
      else if (value.is_number())
        item.inputs = {value.dump()};
      else
        throw CLI::ConversionError("config: unsupported value for " + key);
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  const CLI::App* app_;
};

struct SurfaceArgs {
  std::string surface;
  std::optional<int> n;
  std::optional<double> scale;
  std::optional<double> radius;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<double> c;
  std::optional<int> turns;
  std::optional<double> half_width;
};

struct PatternArgs {
  SurfaceArgs surface;
  std::string gauge = "0.5x0.5";
  std::optional<int> rounds;
  std::optional<double> stop_radius;
  std::string format = "text";
  std::string out;
};

struct MeshArgs {
  SurfaceArgs surface;
  std::string samples = "50x100";
  std::optional<double> r_lo;
  std::string out;
};

struct KnotArgs {
  std::string name;
  double tube_diameter = 0.0;
  bool recommended = false;
  std::string knot_table;
};

struct SurfaceDeleter {
  void operator()(cl_surface* s) const { cl_surface_destroy(s); }
};
struct PatternDeleter {
  void operator()(cl_pattern* p) const { cl_pattern_destroy(p); }
};
struct KnotTableDeleter {
  void operator()(cl_knot_table* t) const { cl_knot_table_destroy(t); }
};
struct StringDeleter {
  void operator()(char* s) const { cl_string_free(s); }
};
using SurfacePtr = std::unique_ptr<cl_surface, SurfaceDeleter>;
using PatternPtr = std::unique_ptr<cl_pattern, PatternDeleter>;
using KnotTablePtr = std::unique_ptr<cl_knot_table, KnotTableDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Library failure carrying the process exit code.
struct Failure {
  int exit_code;
  std::string message;
};

void check(cl_status status) {
  if (status == CL_OK) return;
  const bool usage = status == CL_ERR_INVALID_ARGUMENT ||
                     status == CL_ERR_OUT_OF_DOMAIN ||
                     status == CL_ERR_NOT_APPLICABLE ||
                     status == CL_ERR_NO_EMBEDDING;
  throw Failure{usage ? kExitUsage : kExitFailure,
                std::string(cl_status_name(status)) + ": " + cl_last_error()};
}

void add_surface_options(CLI::App* cmd, SurfaceArgs& a) {
  cmd->add_option("--surface", a.surface,
                  "disc, sphere, hyperbolic, enneper, richmond, bour, catenoid, "
                  "helicoid, mobius");
  cmd->add_option("--n", a.n, "symmetry order (enneper, richmond)");
  cmd->add_option("--scale", a.scale, "cm per parameter unit");
  cmd->add_option("--radius", a.radius, "sphere or hyperbolic radius S");
  cmd->add_option("--r-min", a.r_min, "richmond inner radius");
  cmd->add_option("--r-max", a.r_max, "outer parameter radius");
  cmd->add_option("--c", a.c, "catenoid neck or helicoid pitch");
  cmd->add_option("--turns", a.turns, "helicoid turns");
  cmd->add_option("--half-width", a.half_width, "moebius band half-width");
}

SurfacePtr make_surface(const SurfaceArgs& a) {
  if (a.surface.empty()) throw Failure{kExitUsage, "--surface is required"};
  cl_surface_params p;
  cl_surface_params_init(&p);
  if (a.n) p.n = *a.n;
  if (a.scale) p.scale = *a.scale;
  if (a.radius) p.radius = *a.radius;
  if (a.r_min) p.r_min = *a.r_min;
  if (a.r_max) p.r_max = *a.r_max;
  if (a.c) p.c = *a.c;
  if (a.turns) p.turns = *a.turns;
  if (a.half_width) p.half_width = *a.half_width;
  cl_surface* s = nullptr;
  check(cl_surface_create(a.surface.c_str(), &p, &s));
  return SurfacePtr(s);
}

// Parses "AxB" into two numbers; nullopt on malformed input.
std::optional<std::pair<double, double>> parse_pair(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos) return std::nullopt;
  std::pair<double, double> out;
  for (int k = 0; k < 2; ++k) {
    const std::string part = k == 0 ? text.substr(0, x) : text.substr(x + 1);
    std::istringstream in(part);
    in.imbue(std::locale::classic());
    double v = 0.0;
    if (!(in >> v) || !in.eof() || !std::isfinite(v)) return std::nullopt;
    (k == 0 ? out.first : out.second) = v;
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  file << text;
  if (!file) throw Failure{kExitFailure, "cannot write " + out};
}

int cmd_pattern(const PatternArgs& a) {
  if (a.rounds && a.stop_radius)
    throw Failure{kExitUsage, "--rounds and --stop-radius are mutually exclusive"};
  const auto gauge = parse_pair(a.gauge);
  if (!gauge) throw Failure{kExitUsage, "gauge must be WxH in cm, got " + a.gauge};
  cl_format format;
  if (a.format == "text")
    format = CL_FORMAT_TEXT;
  else if (a.format == "json")
    format = CL_FORMAT_JSON;
  else if (a.format == "csv")
    format = CL_FORMAT_CSV;
  else if (a.format == "graph")
    format = CL_FORMAT_GRAPH;
  else
    throw Failure{kExitUsage, "unknown format " + a.format};

  const SurfacePtr surface = make_surface(a.surface);
  cl_compile_options options{0, 0.0};
  if (a.rounds) {
    if (*a.rounds <= 0) throw Failure{kExitUsage, "--rounds must be positive"};
    options.rounds = *a.rounds;
  }
  if (a.stop_radius) {
    if (!(*a.stop_radius > 0.0)) throw Failure{kExitUsage, "--stop-radius must be positive"};
    options.stop_radius = *a.stop_radius;
  }
  cl_pattern* raw = nullptr;
  check(cl_pattern_compile(surface.get(), gauge->first, gauge->second, &options, &raw));
  const PatternPtr pattern(raw);
  char* text = nullptr;
  check(cl_pattern_render(pattern.get(), format, &text));
  const StringPtr owned(text);
  emit(text, a.out);
  return kExitOk;
}

int cmd_mesh(const MeshArgs& a) {
  const auto samples = parse_pair(a.samples);
  if (!samples || samples->first != std::floor(samples->first) ||
      samples->second != std::floor(samples->second))
    throw Failure{kExitUsage, "samples must be RxT integers, got " + a.samples};
  const SurfacePtr surface = make_surface(a.surface);
  const double* r_lo = a.r_lo ? &*a.r_lo : nullptr;
  const double* r_hi = a.surface.r_max ? &*a.surface.r_max : nullptr;
  char* text = nullptr;
  check(cl_surface_export_obj(surface.get(), static_cast<int>(samples->first),
                              static_cast<int>(samples->second), r_lo, r_hi, &text));
  const StringPtr owned(text);
  emit(text, a.out);
  return kExitOk;
}

std::string format_cm(double value, const char* suffix) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f cm %s\n", value, suffix);
  return buf;
}

int cmd_knot(const KnotArgs& a) {
  if (a.name.empty()) throw Failure{kExitUsage, "--name is required"};
  cl_knot_table* raw = nullptr;
  check(cl_knot_table_create(a.knot_table.empty() ? nullptr : a.knot_table.c_str(), &raw));
  const KnotTablePtr table(raw);
  std::string out;
  double minimum = 0.0;
  const cl_status status =
      cl_knot_min_tube_length(table.get(), a.name.c_str(), a.tube_diameter, &minimum);
  if (status == CL_OK)
    out += format_cm(minimum, "minimum");
  else if (!(a.recommended && status == CL_ERR_NOT_APPLICABLE))
    check(status);
  if (a.recommended) {
    double length = 0.0;
    check(cl_knot_recommended_length(table.get(), a.name.c_str(), a.tube_diameter, &length));
    out += format_cm(length, "recommended");
  }
  std::cout << out;
  return kExitOk;
}

int cmd_verify() {
  char* report = nullptr;
  int failures = 0;
  check(cl_verify(&report, &failures));
  const StringPtr owned(report);
  std::cout << report;
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvelace: crochet patterns from parametrized surfaces"};
  app.require_subcommand(1);

  PatternArgs pattern_args;
  CLI::App* pattern = app.add_subcommand("pattern", "compile a round-by-round pattern");
  add_surface_options(pattern, pattern_args.surface);
  pattern->add_option("--gauge", pattern_args.gauge, "stitch width x height in cm");
  pattern->add_option("--rounds", pattern_args.rounds, "number of rounds");
  pattern->add_option("--stop-radius", pattern_args.stop_radius, "intrinsic radius in cm");
  pattern->add_option("--format", pattern_args.format, "text, json, csv or graph");
  pattern->add_option("--out", pattern_args.out, "output file (default stdout)");

  MeshArgs mesh_args;
  CLI::App* mesh = app.add_subcommand("mesh", "export an OBJ mesh of the surface");
  add_surface_options(mesh, mesh_args.surface);
  mesh->add_option("--samples", mesh_args.samples, "radial x angular samples");
  mesh->add_option("--r-lo", mesh_args.r_lo, "inner parameter radius");
  mesh->add_option("--out", mesh_args.out, "output file (default stdout)");

  KnotArgs knot_args;
  CLI::App* knot = app.add_subcommand("knot", "tube length for a knitted knot");
  knot->add_option("--name", knot_args.name, "knot id such as 3_1");
  knot->add_option("--tube-diameter", knot_args.tube_diameter, "cm")->required();
  knot->add_flag("--recommended", knot_args.recommended, "also print the working length");
  knot->add_option("--knot-table", knot_args.knot_table, "JSON knot table")
      ->envname("CURVELACE_KNOT_TABLE");

  CLI::App* verify = app.add_subcommand("verify", "run the numerical cross-checks");

  app.set_config("--config", "", "JSON file with the same keys as the subcommand flags");
  app.config_formatter(std::make_shared<JsonConfig>(&app));
  app.allow_config_extras(CLI::config_extras_mode::error);
  for (CLI::App* cmd : {pattern, mesh, knot, verify}) cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ConfigError& e) {
    const std::string what = e.what();
    const auto key = what.rfind(' ');
    std::cerr << "error: unknown config key " << what.substr(key + 1) << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*pattern) return cmd_pattern(pattern_args);
    if (*mesh) return cmd_mesh(mesh_args);
    if (*knot) return cmd_knot(knot_args);
    if (*verify) return cmd_verify();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    if (f.exit_code == kExitUsage) {
      const CLI::App* active = app.get_subcommands().front();
      std::cerr << active->help();
    }
    return f.exit_code;
  }
  return kExitUsage;
}
