// SPDX-License-Identifier: Apache-2.0
//
// Weighted monogamy / polygamy bound engine. The whole family is driven by
// the two-parameter kernel
//
//   h(x, y) = (1 + a/y)^(x-1) + (1 + y/a)^(x-1) * t^x,   t >= a >= 1, y > 0,
//
// whose single critical point in y sits at y = a/t with h(x, a/t) = (1+t)^x:
// a maximum for x in [0,1] (monogamy direction) and a minimum for x >= 1
// (polygamy direction). Bound values are reported for any s > 0; dominance
// over the s = 1 specialization (the ZLJM comparison) is only guaranteed for
// s inside [r, 1], which the reports flag.
#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "entbounds/measures.hpp"

namespace entbounds {

enum class BoundMode { monogamy, polygamy };

inline const char* to_string(BoundMode mode) {
  return mode == BoundMode::monogamy ? "monogamy" : "polygamy";
}

/// Parameters of one bound evaluation. In monogamy mode `base_power` is gamma
/// (>= 2) and `exponent` is alpha in [0, gamma]; in polygamy mode they are
/// delta in (0, 1] and beta >= delta. `a` >= 1 scales the ratio condition and
/// `s` > 0 indexes the bound family.
struct BoundParams {
  BoundMode mode = BoundMode::monogamy;
  double base_power = 2.0;
  double exponent = 2.0;
  double a = 1.0;
  double s = 1.0;
};

inline void validate(const BoundParams& p) {
  if (!(p.a >= 1.0)) throw std::domain_error("BoundParams: requires a >= 1");
  if (!(p.s > 0.0)) throw std::domain_error("BoundParams: requires s > 0");
  if (p.mode == BoundMode::monogamy) {
    if (!(p.base_power >= 2.0))
      throw std::domain_error("BoundParams: monogamy requires gamma >= 2");
    if (!(p.exponent >= 0.0 && p.exponent <= p.base_power))
      throw std::domain_error(
          "BoundParams: monogamy requires 0 <= alpha <= gamma");
  } else {
    if (!(p.base_power > 0.0 && p.base_power <= 1.0))
      throw std::domain_error(
          "BoundParams: polygamy requires delta in (0, 1]");
    if (!(p.exponent >= p.base_power))
      throw std::domain_error("BoundParams: polygamy requires beta >= delta");
  }
}

/// The kernel h(x, y) itself. Evaluable for any t (the t >= a window is
/// flagged by the report layer, not enforced here).
inline double kernel_h(double x, double y, double a, double t) {
  if (!(y > 0.0)) throw std::domain_error("kernel_h: requires y > 0");
  if (!(a >= 1.0)) throw std::domain_error("kernel_h: requires a >= 1");
  return std::pow(1.0 + a / y, x - 1.0) +
         std::pow(1.0 + y / a, x - 1.0) * std::pow(t, x);
}

inline bool kernel_ratio_ok(double a, double t) { return t >= a; }

/// Two-sided kernel comparison at one parameter tuple. For x in [0, 1] the
/// power mean (1+t)^x dominates h(x, s); for x >= 1 the direction flips.
struct Lemma1Report {
  double power_side = 0.0;   ///< (1 + t)^x
  double kernel_side = 0.0;  ///< h(x, s)
  int direction = 0;         ///< +1: power >= kernel, -1: kernel >= power, 0: equality
  double margin = 0.0;       ///< satisfied-direction difference
  bool holds = false;        ///< margin >= -1e-12
};

inline Lemma1Report check_lemma1(double x, double t, double a, double s) {
  if (!(a >= 1.0)) throw std::domain_error("check_lemma1: requires a >= 1");
  if (!(t >= a)) throw std::domain_error("check_lemma1: requires t >= a");
  if (!(s > 0.0)) throw std::domain_error("check_lemma1: requires s > 0");
  if (!(x >= 0.0)) throw std::domain_error("check_lemma1: requires x >= 0");

  Lemma1Report rep;
  rep.power_side = std::pow(1.0 + t, x);
  rep.kernel_side = kernel_h(x, s, a, t);
  rep.direction = x < 1.0 ? 1 : (x > 1.0 ? -1 : 0);
  rep.margin = rep.direction >= 0 ? rep.power_side - rep.kernel_side
                                  : rep.kernel_side - rep.power_side;
  if (rep.direction == 0) rep.margin = -std::abs(rep.margin);
  rep.holds = rep.margin >= -1e-12;
  return rep;
}

/// RHS of the N-term chained inequality
///   (sum p_i)^x >= (1+a/s)^(x-1) * sum_i ((1+s/a)^(x-1))^(N-i) p_i^x
/// for descending p with p_i >= a p_{i+1}. Shared by the bound builder and
/// the brute-force property checks.
inline double chained_rhs(const std::vector<double>& p, double x, double a,
                          double s) {
  const double outer = std::pow(1.0 + a / s, x - 1.0);
  const double inner = std::pow(1.0 + s / a, x - 1.0);
  double sum = 0.0;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    sum += std::pow(inner, static_cast<double>(n - 1 - i)) * std::pow(p[i], x);
  return outer * sum;
}

struct ChainCheck {
  bool ok = true;
  std::size_t failing_index = 0;   ///< first i with p_i^g < a p_{i+1}^g
  double max_admissible_a = std::numeric_limits<double>::infinity();
};

/// Verifies the descending-chain ratio condition E_i^g >= a E_{i+1}^g and
/// reports the largest `a` the chain admits, min_i (E_i / E_{i+1})^g.
inline ChainCheck check_power_chain(const std::vector<double>& parts, double g,
                                    double a) {
  ChainCheck chk;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const double pi = std::pow(parts[i], g);
    const double pn = std::pow(parts[i + 1], g);
    const double admissible =
        pn > 0.0 ? pi / pn : std::numeric_limits<double>::infinity();
    chk.max_admissible_a = std::min(chk.max_admissible_a, admissible);
    const double slack = 1e-12 * std::max(1.0, a * pn);
    if (chk.ok && pi + slack < a * pn) {
      chk.ok = false;
      chk.failing_index = i;
    }
  }
  return chk;
}

/// Lower end of the s-window [r, 1] inside which the s-indexed bound
/// dominates its s = 1 specialization: the max of a * (next power) over the
/// running prefix sum of the g-th powers of the descending parts.
inline double threshold_ratio(const std::vector<double>& parts_descending,
                              double a, double g) {
  if (parts_descending.size() < 2)
    throw std::domain_error("threshold_ratio: needs at least two parts");
  if (!(std::pow(parts_descending.front(), g) > 0.0))
    throw std::domain_error("threshold_ratio: leading part must be positive");
  double prefix = std::pow(parts_descending[0], g);
  double r = 0.0;
  for (std::size_t i = 1; i < parts_descending.size(); ++i) {
    const double pi = std::pow(parts_descending[i], g);
    r = std::max(r, a * pi / prefix);
    prefix += pi;
  }
  return r;
}

inline double threshold_ratio(const MeasureVector& mv, double a, double g) {
  return threshold_ratio(mv.parts, a, g);
}

/// Weight pair of the normalized form of the tripartite relations:
/// w1 = (1+s/a)^alpha on the larger measure, w2 = (1+a/s)^alpha on the
/// smaller one, with 1/w1^(1/alpha) + 1/w2^(1/alpha) = 1 identically.
struct IntroWeights {
  double w1 = 0.0;
  double w2 = 0.0;
};

inline IntroWeights intro_weights(double a, double s, double alpha) {
  if (!(a >= 1.0)) throw std::domain_error("intro_weights: requires a >= 1");
  if (!(s > 0.0)) throw std::domain_error("intro_weights: requires s > 0");
  if (!(alpha > 0.0))
    throw std::domain_error("intro_weights: weights undefined for alpha <= 0");
  return {std::pow(1.0 + s / a, alpha), std::pow(1.0 + a / s, alpha)};
}

struct BoundFlags {
  bool ratio_ok = true;          ///< chain condition E_i^g >= a E_{i+1}^g holds
  bool s_in_window = true;       ///< s inside [r, 1] (dominance window)
  bool exponent_in_range = true; ///< exponent inside the proven range
  bool zjz_exponent_ok = true;   ///< inside the ZJZ proven range (alpha <= gamma/2)
};

/// One evaluated bound with its context: the measure-power ratio t of the two
/// leading parts, the dominance window, comparison-family values and the gaps
/// (positive gap = our bound is tighter).
struct BoundReport {
  double our_bound = 0.0;
  std::map<std::string, double> comparison;
  std::map<std::string, double> gap;
  double t = std::numeric_limits<double>::quiet_NaN();
  double window_lo = 0.0;
  double window_hi = 1.0;
  double max_admissible_a = std::numeric_limits<double>::infinity();
  BoundFlags flags;
  BoundParams params;
  std::vector<int> part_order;  ///< original position of each sorted part
};

namespace detail {

/// Core bound value over descending parts. Two parts take the pair form
///   (1+a/s)^(x-1) E_2^e + (1+s/a)^(x-1) E_1^e,
/// which collapses to (E_1^g + E_2^g)^(e/g) at s = a/t; three or more parts
/// take the chained N-term form, whose top term carries the common
/// (1+a/s)^(x-1) prefactor as well.
inline double weighted_bound_value(const std::vector<double>& parts, double g,
                                   double e, double a, double s) {
  const double x = e / g;
  if (parts.size() == 2) {
    return std::pow(1.0 + a / s, x - 1.0) * std::pow(parts[1], e) +
           std::pow(1.0 + s / a, x - 1.0) * std::pow(parts[0], e);
  }
  const double inner = std::pow(1.0 + s / a, x - 1.0);
  double sum = 0.0;
  const std::size_t n = parts.size();
  for (std::size_t i = 0; i < n; ++i)
    sum += std::pow(inner, static_cast<double>(n - 1 - i)) *
           std::pow(parts[i], e);
  return std::pow(1.0 + a / s, x - 1.0) * sum;
}

inline BoundReport make_bound_report(const MeasureVector& mv,
                                     const BoundParams& params) {
  validate(params);
  if (mv.parts.size() < 2)
    throw std::domain_error("bound: needs at least two pairwise measures");

  const double g = params.base_power;
  const auto chain = check_power_chain(mv.parts, g, params.a);
  if (!chain.ok) {
    const std::size_t i = chain.failing_index;
    throw std::domain_error(
        "bound: ratio condition E_" + std::to_string(i + 1) +
        "^g >= a*E_" + std::to_string(i + 2) +
        "^g fails for a=" + std::to_string(params.a) +
        "; maximum admissible a is " + std::to_string(chain.max_admissible_a));
  }

  BoundReport rep;
  rep.params = params;
  rep.part_order = mv.original_index;
  rep.max_admissible_a = chain.max_admissible_a;

  const double p1 = std::pow(mv.parts[0], g);
  const double p2 = std::pow(mv.parts[1], g);
  rep.t = p2 > 0.0 ? p1 / p2 : std::numeric_limits<double>::infinity();
  rep.window_lo = p1 > 0.0 ? threshold_ratio(mv.parts, params.a, g) : 0.0;
  rep.window_hi = 1.0;

  rep.flags.ratio_ok = true;
  rep.flags.s_in_window = params.s >= rep.window_lo - 1e-12 &&
                          params.s <= rep.window_hi + 1e-12;
  rep.flags.exponent_in_range =
      params.mode == BoundMode::monogamy
          ? params.exponent <= params.base_power
          : params.exponent >= params.base_power;
  rep.flags.zjz_exponent_ok = params.mode != BoundMode::monogamy ||
                              params.exponent <= params.base_power / 2.0;

  rep.our_bound = weighted_bound_value(mv.parts, g, params.exponent, params.a,
                                       params.s);
  return rep;
}

}  // namespace detail

/// Tripartite weighted monogamy lower bound (two pairwise measures):
/// E_{A|BC}^alpha >= (1+a/s)^(alpha/gamma-1) E_2^alpha
///                 + (1+s/a)^(alpha/gamma-1) E_1^alpha.
inline BoundReport monogamy_bound_tripartite(const MeasureVector& mv,
                                             const BoundParams& params) {
  if (params.mode != BoundMode::monogamy)
    throw std::domain_error("monogamy_bound_tripartite: wrong mode");
  if (mv.parts.size() != 2)
    throw std::domain_error(
        "monogamy_bound_tripartite: needs exactly two pairwise measures");
  return detail::make_bound_report(mv, params);
}

/// N-party weighted monogamy lower bound over a descending chain. Two parts
/// reduce exactly to the tripartite form.
inline BoundReport monogamy_bound_multipartite(const MeasureVector& mv,
                                               const BoundParams& params) {
  if (params.mode != BoundMode::monogamy)
    throw std::domain_error("monogamy_bound_multipartite: wrong mode");
  return detail::make_bound_report(mv, params);
}

/// Tripartite weighted polygamy upper bound (dual direction, beta >= delta).
inline BoundReport polygamy_bound_tripartite(const MeasureVector& mv,
                                             const BoundParams& params) {
  if (params.mode != BoundMode::polygamy)
    throw std::domain_error("polygamy_bound_tripartite: wrong mode");
  if (mv.parts.size() != 2)
    throw std::domain_error(
        "polygamy_bound_tripartite: needs exactly two pairwise measures");
  return detail::make_bound_report(mv, params);
}

inline BoundReport polygamy_bound_multipartite(const MeasureVector& mv,
                                               const BoundParams& params) {
  if (params.mode != BoundMode::polygamy)
    throw std::domain_error("polygamy_bound_multipartite: wrong mode");
  return detail::make_bound_report(mv, params);
}

inline BoundReport evaluate_bound(const MeasureVector& mv,
                                  const BoundParams& params) {
  return params.mode == BoundMode::monogamy
             ? monogamy_bound_multipartite(mv, params)
             : polygamy_bound_multipartite(mv, params);
}

/// Known bound-family identifiers for comparison series.
///  - "ZLJM":   our formula specialized to s = 1.
///  - "ZLJM_T": the same pair form with the ratio t substituted for a, an
///              alternate series kept for chart matching (two parts only).
///  - "JFQ":    E_small^e + ((1+a)^(e/g) - 1)/a^(e/g) * E_large^e.
///  - "ZJZ":    p^(e/g) E_small^e + ((1+a)^(e/g) - p^(e/g))/a^(e/g) E_large^e.
/// JFQ and ZJZ are pair forms and are emitted only for two-part vectors.
inline const std::vector<std::string>& known_comparison_ids() {
  static const std::vector<std::string> ids{"ZLJM", "ZLJM_T", "JFQ", "ZJZ"};
  return ids;
}

/// Our bound plus the comparison families, with per-family gaps. `p` is the
/// ZJZ interpolation weight in (0, 1].
inline BoundReport comparison_bounds(const MeasureVector& mv,
                                     const BoundParams& params,
                                     double p = 0.5) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::domain_error("comparison_bounds: requires p in (0, 1]");

  BoundReport rep = evaluate_bound(mv, params);
  const double g = params.base_power;
  const double e = params.exponent;
  const double x = e / g;

  rep.comparison["ZLJM"] = detail::weighted_bound_value(
      mv.parts, g, e, params.a, 1.0);

  if (mv.parts.size() == 2) {
    const double large = std::pow(mv.parts[0], e);
    const double small = std::pow(mv.parts[1], e);
    const double ax = std::pow(params.a, x);
    const double onepa = std::pow(1.0 + params.a, x);

    if (std::isfinite(rep.t)) {
      rep.comparison["ZLJM_T"] =
          std::pow(1.0 + rep.t, x - 1.0) * small +
          std::pow(1.0 + 1.0 / rep.t, x - 1.0) * large;
    }
    rep.comparison["JFQ"] = small + (onepa - 1.0) / ax * large;
    const double px = std::pow(p, x);
    rep.comparison["ZJZ"] = px * small + (onepa - px) / ax * large;
  }

  const double sign = params.mode == BoundMode::monogamy ? 1.0 : -1.0;
  for (const auto& [id, value] : rep.comparison)
    rep.gap[id] = sign * (rep.our_bound - value);
  return rep;
}

/// One point of an s-sweep of the bound family.
struct TightnessPoint {
  double s = 0.0;
  double bound = 0.0;
  bool in_window = false;
};

struct TightnessReport {
  std::vector<TightnessPoint> points;
  std::size_t tightest_index = 0;
  double tightest_bound = 0.0;
  double limit_value = 0.0;  ///< bound value in the s -> window_lo limit
  double window_lo = 0.0;
  double window_hi = 1.0;
};

/// Evaluates the bound family over an s-grid, marks the tightest point (max
/// in monogamy mode, min in polygamy mode) and reports the critical-point
/// limit, which for two parts is exactly (E_1^g + E_2^g)^(e/g).
inline TightnessReport tightness_sweep(const MeasureVector& mv,
                                       const BoundParams& base,
                                       const std::vector<double>& s_grid) {
  if (s_grid.empty())
    throw std::domain_error("tightness_sweep: empty s grid");
  for (double s : s_grid)
    if (!(s > 0.0))
      throw std::domain_error("tightness_sweep: grid values must be positive");

  BoundParams probe = base;
  probe.s = s_grid.front();
  BoundReport first = evaluate_bound(mv, probe);

  TightnessReport rep;
  rep.window_lo = first.window_lo;
  rep.window_hi = first.window_hi;

  const double g = base.base_power;
  const double e = base.exponent;
  if (mv.parts.size() == 2) {
    rep.limit_value = std::pow(
        std::pow(mv.parts[0], g) + std::pow(mv.parts[1], g), e / g);
  } else {
    rep.limit_value = detail::weighted_bound_value(
        mv.parts, g, e, base.a, std::max(rep.window_lo, 1e-300));
  }

  const bool maximize = base.mode == BoundMode::monogamy;
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    TightnessPoint pt;
    pt.s = s_grid[i];
    pt.bound = detail::weighted_bound_value(mv.parts, g, e, base.a, pt.s);
    pt.in_window = pt.s >= rep.window_lo - 1e-12 && pt.s <= rep.window_hi + 1e-12;
    rep.points.push_back(pt);
    const bool better = maximize ? pt.bound > rep.points[rep.tightest_index].bound
                                 : pt.bound < rep.points[rep.tightest_index].bound;
    if (i == 0 || better) rep.tightest_index = i;
  }
  rep.tightest_bound = rep.points[rep.tightest_index].bound;
  return rep;
}

}  // namespace entbounds
