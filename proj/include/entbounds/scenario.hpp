// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entbounds/bounds.hpp"
#include "entbounds/qstate.hpp"

namespace entbounds {

/// Scenario / CLI input that fails validation (bad field values, violated
/// exclusivity rules). Maps to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file (JSON syntax, wrong types). Maps to exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File-system failure while reading or writing. Maps to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExponentRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

/// A fully validated run description: either a pure state (measures computed
/// here) or a direct measure vector, never both, plus the bound parameters
/// and sweep layout.
struct Scenario {
  std::string name;
  BoundMode mode = BoundMode::monogamy;
  std::optional<PureState<double>> state;
  int focus = 0;  ///< subsystem treated as party A in state scenarios
  std::optional<MeasureVector> measure_vector;
  double base_power = 2.0;  ///< gamma or delta
  double a = 1.0;
  double s = 1.0;
  double zjz_p = 0.5;
  ExponentRange exponent_range;
  std::vector<std::string> comparisons;
  std::string output_stem = "sweep";
};

/// Loads a scenario from a JSON file, or one of the built-in presets
/// ("example1", "example2").
Scenario load_scenario(const std::string& path_or_name);

/// Parses scenario JSON text. `origin` names the source in error messages.
Scenario parse_scenario(const std::string& json_text,
                        const std::string& origin);

const std::vector<std::string>& builtin_scenario_names();

/// The scenario's measure vector: returned directly if supplied, computed
/// from the state through the measures layer otherwise.
MeasureVector scenario_measures(const Scenario& sc);

/// Bound parameters of the scenario at one exponent grid point.
BoundParams scenario_params(const Scenario& sc, double exponent);

}  // namespace entbounds
