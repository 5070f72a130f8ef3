// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace entbounds {

/// Numerical tolerances shared by state validation and the measure layer.
/// Every check in the library reads from one instance of this record so the
/// whole code base agrees on what "equal" and "positive" mean.
struct Tolerances {
  double state_norm = 1e-12;       ///< |<psi|psi> - 1| for pure states
  double hermiticity = 1e-12;      ///< entrywise |m - m^dagger| for density matrices
  double trace_one = 1e-12;        ///< |Tr(rho) - 1|
  double psd_floor = -1e-10;       ///< smallest admissible eigenvalue of a state
  double hermitian_input = 1e-10;  ///< eigensolver / trace-norm input check
  double measure_zero = 1e-10;     ///< measure values below this count as zero
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace entbounds
