// SPDX-License-Identifier: Apache-2.0
//
// Entanglement measures on pure states and two-qubit mixed states:
// concurrence (pure closed form and the two-qubit spin-flip formula),
// negativity in the unnormalized convention ||rho^T_A|| - 1, and SCREN for
// pure states. Mixed-state convex-roof values are accepted as inputs through
// build_measure_vector, never computed here.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "entbounds/qstate.hpp"

namespace entbounds {

/// Joint bipartition measure value E_{A|B1..B_{N-1}} together with the
/// pairwise values E_i sorted descending. `original_index` maps each sorted
/// slot back to its position in the caller-supplied order, with ties broken
/// by that original position.
struct MeasureVector {
  double joint = 0.0;
  std::vector<double> parts;
  std::vector<int> original_index;
  std::string label;
};

inline MeasureVector build_measure_vector(double joint,
                                          const std::vector<double>& parts,
                                          std::string label = {}) {
  if (joint < 0.0)
    throw std::domain_error("build_measure_vector: joint value is negative");
  for (double v : parts)
    if (v < 0.0)
      throw std::domain_error("build_measure_vector: part value is negative");

  MeasureVector mv;
  mv.joint = joint;
  mv.label = std::move(label);
  mv.original_index.resize(parts.size());
  std::iota(mv.original_index.begin(), mv.original_index.end(), 0);
  std::stable_sort(mv.original_index.begin(), mv.original_index.end(),
                   [&](int l, int r) { return parts[l] > parts[r]; });
  mv.parts.reserve(parts.size());
  for (int i : mv.original_index) mv.parts.push_back(parts[i]);
  return mv;
}

namespace detail {

template <typename Scalar>
std::vector<int> checked_cut(const PureState<Scalar>& state,
                             std::vector<int> cut, const char* who) {
  cut = canonical_subset(std::move(cut), state.subsystem_count(), who);
  if (cut.empty() || cut.size() == state.subsystem_count())
    throw std::domain_error(std::string(who) +
                            ": bipartition must be a nonempty proper subset");
  return cut;
}

template <typename Scalar>
std::vector<int> checked_cut(const DensityMatrix<Scalar>& state,
                             std::vector<int> cut, const char* who) {
  cut = canonical_subset(std::move(cut), state.subsystem_count(), who);
  if (cut.empty() || cut.size() == state.subsystem_count())
    throw std::domain_error(std::string(who) +
                            ": bipartition must be a nonempty proper subset");
  return cut;
}

}  // namespace detail

/// Concurrence of a pure state across the cut A|rest:
/// C = sqrt(2 [1 - Tr(rho_A^2)]).
template <typename Scalar>
Scalar concurrence_pure(const PureState<Scalar>& state,
                        const std::vector<int>& cut_a) {
  const auto cut = detail::checked_cut(state, cut_a, "concurrence_pure");
  const auto rho_a = partial_trace(state.density(), cut);
  const Scalar arg = Scalar(2) * (Scalar(1) - purity(rho_a));
  return std::sqrt(std::max(Scalar(0), arg));
}

/// Two-qubit mixed-state concurrence via the spin-flip spectrum:
/// C = max(0, l1 - l2 - l3 - l4), the l_i being the descending square roots
/// of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y). Conjugation is entrywise
/// in the computational basis.
template <typename Scalar>
Scalar concurrence_two_qubit(const DensityMatrix<Scalar>& state) {
  if (state.subsystem_count() != 2 || state.dims()[0] != 2 ||
      state.dims()[1] != 2)
    throw std::domain_error(
        "concurrence_two_qubit: requires a two-qubit (4x4) density matrix");

  ComplexMatrix<Scalar> flip = ComplexMatrix<Scalar>::Zero(4, 4);
  flip(0, 3) = Scalar(-1);
  flip(1, 2) = Scalar(1);
  flip(2, 1) = Scalar(1);
  flip(3, 0) = Scalar(-1);

  const ComplexMatrix<Scalar> r =
      state.matrix() * flip * state.matrix().conjugate() * flip;
  Eigen::ComplexEigenSolver<ComplexMatrix<Scalar>> solver(r, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("concurrence_two_qubit: eigensolver failed");

  std::vector<Scalar> roots(4);
  for (int i = 0; i < 4; ++i)
    roots[i] = std::sqrt(std::max(Scalar(0), solver.eigenvalues()[i].real()));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(Scalar(0), roots[0] - roots[1] - roots[2] - roots[3]);
}

/// Negativity N(rho) = ||rho^T_A|| - 1 (unnormalized convention). The cut may
/// contain several subsystems; their transposes compose.
template <typename Scalar>
Scalar negativity(const DensityMatrix<Scalar>& state,
                  const std::vector<int>& cut_a) {
  const auto cut = detail::checked_cut(state, cut_a, "negativity");
  ComplexMatrix<Scalar> pt = state.matrix();
  for (int k : cut) pt = partial_transpose(pt, state.dims(), k);
  return std::max(Scalar(0), trace_norm(pt) - Scalar(1));
}

template <typename Scalar>
Scalar negativity(const PureState<Scalar>& state,
                  const std::vector<int>& cut_a) {
  return negativity(state.density(), cut_a);
}

/// Independent route for pure states: N = (Tr sqrt(rho_A))^2 - 1, from the
/// reduced spectrum alone. Used to cross-check the trace-norm path.
template <typename Scalar>
Scalar negativity_from_schmidt(const PureState<Scalar>& state,
                               const std::vector<int>& cut_a) {
  const auto cut = detail::checked_cut(state, cut_a, "negativity_from_schmidt");
  const auto rho_a = partial_trace(state.density(), cut);
  const auto eigs = hermitian_eigenvalues(rho_a.matrix());
  Scalar sum{};
  for (Eigen::Index i = 0; i < eigs.size(); ++i)
    sum += std::sqrt(std::max(Scalar(0), eigs[i]));
  return std::max(Scalar(0), sum * sum - Scalar(1));
}

/// The halved (normalized) negativity convention, as a derived accessor.
template <typename State>
auto negativity_halved(const State& state, const std::vector<int>& cut_a) {
  return negativity(state, cut_a) / 2;
}

/// SCREN of a pure state. Pure-state decompositions are unique, so SCREN and
/// SCRENoA coincide and both equal the squared negativity.
template <typename Scalar>
Scalar scren_pure(const PureState<Scalar>& state,
                  const std::vector<int>& cut_a) {
  const Scalar n = negativity(state, cut_a);
  return n * n;
}

/// Concurrence measure vector of a multi-qubit pure state with `focus` as
/// party A: joint C_{A|rest} plus the pairwise two-qubit concurrences
/// C_{AB_j}, sorted descending by build_measure_vector.
template <typename Scalar>
MeasureVector concurrence_vector(const PureState<Scalar>& state, int focus) {
  if (state.subsystem_count() < 3)
    throw std::domain_error(
        "concurrence_vector: needs at least three subsystems");
  for (Eigen::Index d : state.dims())
    if (d != 2)
      throw std::domain_error(
          "concurrence_vector: pairwise concurrence requires qubits");
  if (focus < 0 || static_cast<std::size_t>(focus) >= state.subsystem_count())
    throw std::domain_error("concurrence_vector: focus index out of range");

  const double joint = concurrence_pure(state, {focus});
  const auto rho = state.density();
  std::vector<double> parts;
  for (int j = 0; j < static_cast<int>(state.subsystem_count()); ++j) {
    if (j == focus) continue;
    parts.push_back(concurrence_two_qubit(partial_trace(rho, {focus, j})));
  }
  return build_measure_vector(joint, parts, "concurrence");
}

}  // namespace entbounds
