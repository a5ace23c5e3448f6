#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "holobound/automorphisms.hpp"
#include "holobound/estimates.hpp"
#include "holobound/geometry.hpp"
#include "holobound/measures.hpp"
#include "holobound/quadrature.hpp"

namespace holobound {

/// Invalid configuration. The message starts with the offending field path,
/// e.g. "checks[2].function: undefined function id 'g'".
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpaceConfig {
  std::string id;
  std::string domain;  // fock | ball | polydisc
  std::size_t n = 1;
  std::string weight;  // fock | fock_aniso | ball | polydisc
  std::vector<double> alphas;
  double p = 2.0;  // +inf allowed
  std::vector<double> radii;
  std::vector<std::size_t> blocks;
};

struct AutomorphismConfig {
  std::string id;
  std::string kind;  // translation | ball | polydisc
  std::vector<double> z0_re;
  std::vector<double> z0_im;
  std::vector<double> radii;
};

struct TermConfig {
  double coeff_re = 1.0;
  double coeff_im = 0.0;
  std::vector<int> powers;
  std::vector<double> exp_re;
  std::vector<double> exp_im;
};

struct FunctionConfig {
  std::string id;
  std::size_t n = 1;
  std::vector<TermConfig> terms;
};

/// One requested check. Which fields are used depends on `check`:
///   bound             space, function, point
///   sup-bound         space, function
///   sharpness         space, point
///   delta0            space, functions and/or random
///   invariance        space, automorphism
///   pluriharmonicity  space, automorphism, point or random
///   scheme            space, automorphism, function
///   integrated        space, function, outer, point (center), radius
struct CheckConfig {
  std::string check;
  std::string space;
  std::string function;
  std::vector<std::string> functions;
  std::string automorphism;
  std::vector<double> point_re;
  std::vector<double> point_im;
  std::size_t random = 0;
  std::string outer;
  double radius = 0.0;
};

struct IntegrationConfig {
  std::string method = "auto";
  std::size_t nodes = 10000;
  std::size_t samples = 1000000;
  std::optional<std::uint64_t> seed;
  double tol = 1e-10;
  double mc_tol = 0.05;
};

struct OutputConfig {
  std::string path;
  std::string format = "csv";
};

struct RunConfig {
  std::string description;
  std::uint64_t seed = 0;
  OutputConfig output;
  IntegrationConfig integration;
  std::vector<SpaceConfig> spaces;
  std::vector<AutomorphismConfig> automorphisms;
  std::vector<FunctionConfig> functions;
  std::vector<CheckConfig> checks;
  /// Declared admissible parameter ranges, e.g. {"alpha": "(-1,inf)"}.
  std::map<std::string, std::string> parameter_ranges;
};

/// Parses and validates a JSON document. Throws ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
/// Canonical JSON text (sorted keys, 2-space indent); parse_config inverts it.
std::string serialize_config(const RunConfig& c);
/// FNV-1a digest of the compact canonical serialization, as 16 hex digits.
std::string config_digest(const RunConfig& c);

/// Builders from validated config entries.
SpaceSpec build_space(const SpaceConfig& c);
Automorphism build_automorphism(const AutomorphismConfig& c);
HoloFunction build_function(const FunctionConfig& c);
IntegrationPlan build_plan(const RunConfig& c);
CPoint build_point(const std::vector<double>& re, const std::vector<double>& im);

/// Built-in configurations.
std::vector<std::string> preset_names();
RunConfig preset(const std::string& name);
std::string preset_summary(const std::string& name);

}  // namespace holobound
