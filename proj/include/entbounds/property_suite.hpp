// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace entbounds {

/// Outcome of sampling one invariant. `worst_margin` is the smallest
/// satisfied-direction margin seen; `worst_case` describes the tuple that
/// produced it (a counterexample when the invariant failed).
struct InvariantResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;
  std::string worst_case;
  bool pass = true;
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::vector<InvariantResult> results;
  bool all_pass = true;
};

/// Seeded sampling of the bound-engine invariants: both kernel inequality
/// directions, the chained N-term inequality, weight normalization, the
/// critical-point identity and dominance over the s = 1 specialization.
/// Deterministic for a given seed. `corrupt_kernel` perturbs the kernel so a
/// counterexample must surface; used to self-test the harness.
PropertyReport run_property_suite(std::uint64_t seed, std::size_t samples,
                                  bool corrupt_kernel = false);

/// Human-readable per-invariant summary, one line each.
std::string format_report(const PropertyReport& report);

/// Uniform double in [lo, hi) from explicit 53-bit draws, so sequences are
/// identical across standard libraries.
inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace entbounds
