// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "entbounds/scenario.hpp"

namespace entbounds {

/// One exponent grid point of a sweep. `comparisons` is aligned with the
/// result's `comparison_ids`; `flags` is empty when everything checked out.
struct SweepRow {
  double exponent = 0.0;
  double joint_power = 0.0;
  double our_bound = 0.0;
  std::vector<double> comparisons;
  std::vector<std::string> flags;
};

struct SweepResult {
  std::string scenario_name;
  BoundMode mode = BoundMode::monogamy;
  MeasureVector mv;
  std::vector<std::string> comparison_ids;
  std::vector<SweepRow> rows;
  double window_lo = 0.0;  ///< dominance window [r, 1] of the scenario's s
  double window_hi = 1.0;
  double t = 0.0;
  double s = 0.0;
  bool s_in_window = false;
  bool base_relation_holds = false;  ///< g-power relation between joint and parts
};

/// Evaluates the scenario over its exponent grid. Rows where the bound
/// preconditions fail are flagged and filled with NaNs; the run continues.
SweepResult run_sweep(const Scenario& sc);

/// CSV rendering: header row, comma separator, LF line endings, numbers at 15
/// significant digits. Byte-identical for identical scenarios.
std::string sweep_to_csv(const SweepResult& result);

/// Line-chart rendering of all series (our bound dashed) as standalone SVG.
std::string sweep_to_svg(const SweepResult& result);

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace entbounds
