// SPDX-License-Identifier: Apache-2.0
//
// Validated quantum-state value types over the linalg layer. Both types are
// immutable after construction; all operations on them are pure functions, so
// concurrent use needs no synchronization.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "entbounds/linalg.hpp"
#include "entbounds/tolerances.hpp"

namespace entbounds {

namespace detail {

inline void check_subsystem_dims(const Dims& dims, const char* who) {
  if (dims.empty())
    throw std::invalid_argument(std::string(who) + ": no subsystems");
  for (Eigen::Index d : dims)
    if (d < 2)
      throw std::invalid_argument(std::string(who) +
                                  ": subsystem dimensions must be >= 2");
}

}  // namespace detail

template <typename Scalar>
class DensityMatrix;

/// Normalized complex amplitude vector over a tensor product of subsystems.
template <typename Scalar = double>
class PureState {
 public:
  PureState(Dims dims, ComplexVector<Scalar> amplitudes,
            const Tolerances& tol = default_tolerances())
      : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
    detail::check_subsystem_dims(dims_, "PureState");
    if (detail::total_dimension(dims_) != amps_.size())
      throw std::invalid_argument(
          "PureState: amplitude count does not match subsystem dimensions");
    const Scalar norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - Scalar(1)) > tol.state_norm)
      throw std::invalid_argument("PureState: amplitudes are not normalized");
  }

  const Dims& dims() const { return dims_; }
  const ComplexVector<Scalar>& amplitudes() const { return amps_; }
  Eigen::Index dimension() const { return amps_.size(); }
  std::size_t subsystem_count() const { return dims_.size(); }

  DensityMatrix<Scalar> density(
      const Tolerances& tol = default_tolerances()) const;

 private:
  Dims dims_;
  ComplexVector<Scalar> amps_;
};

/// Hermitian, positive semidefinite, trace-one matrix with subsystem tags.
/// All three invariants are checked at construction.
template <typename Scalar = double>
class DensityMatrix {
 public:
  DensityMatrix(Dims dims, ComplexMatrix<Scalar> matrix,
                const Tolerances& tol = default_tolerances())
      : dims_(std::move(dims)), mat_(std::move(matrix)) {
    detail::check_subsystem_dims(dims_, "DensityMatrix");
    if (mat_.rows() != mat_.cols())
      throw std::invalid_argument("DensityMatrix: matrix must be square");
    if (detail::total_dimension(dims_) != mat_.rows())
      throw std::invalid_argument(
          "DensityMatrix: matrix side does not match subsystem dimensions");
    if (!is_hermitian(mat_, tol.hermiticity))
      throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(mat_.trace().real() - Scalar(1)) > tol.trace_one ||
        std::abs(mat_.trace().imag()) > tol.trace_one)
      throw std::invalid_argument("DensityMatrix: trace must equal one");
    const auto eigs = hermitian_eigenvalues(mat_, tol.hermiticity * 10);
    if (eigs.minCoeff() < tol.psd_floor)
      throw std::invalid_argument(
          "DensityMatrix: matrix is not positive semidefinite");
  }

  const Dims& dims() const { return dims_; }
  const ComplexMatrix<Scalar>& matrix() const { return mat_; }
  Eigen::Index dimension() const { return mat_.rows(); }
  std::size_t subsystem_count() const { return dims_.size(); }

 private:
  Dims dims_;
  ComplexMatrix<Scalar> mat_;
};

template <typename Scalar>
DensityMatrix<Scalar> PureState<Scalar>::density(const Tolerances& tol) const {
  ComplexMatrix<Scalar> rho = amps_ * amps_.adjoint();
  return DensityMatrix<Scalar>(dims_, std::move(rho), tol);
}

/// Reduced density matrix on the kept subsystems. Trace, Hermiticity and
/// positivity carry over; the result is revalidated on construction.
template <typename Scalar>
DensityMatrix<Scalar> partial_trace(const DensityMatrix<Scalar>& state,
                                    const std::vector<int>& keep) {
  auto reduced = partial_trace(state.matrix(), state.dims(), keep);
  Dims kept_dims;
  const auto canon = detail::canonical_subset(keep, state.dims().size(),
                                              "partial_trace");
  for (int k : canon) kept_dims.push_back(state.dims()[k]);
  return DensityMatrix<Scalar>(std::move(kept_dims), std::move(reduced));
}

/// Partial transposition of one subsystem. The result stays Hermitian but is
/// generally not positive, hence a plain matrix is returned.
template <typename Scalar>
ComplexMatrix<Scalar> partial_transpose(const DensityMatrix<Scalar>& state,
                                        int subsystem) {
  return partial_transpose(state.matrix(), state.dims(), subsystem);
}

/// Tr(rho^2), in (0, 1]; equals 1 exactly for pure states. For Hermitian rho
/// this is the squared Frobenius norm.
template <typename Scalar>
Scalar purity(const DensityMatrix<Scalar>& state) {
  return state.matrix().squaredNorm();
}

using PureStateXd = PureState<double>;
using DensityMatrixXd = DensityMatrix<double>;

}  // namespace entbounds
