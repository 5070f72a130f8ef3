// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for small multipartite systems (up to a few
// qubits). All operations are free functions over Eigen expressions; subsystem
// structure is passed explicitly as a dimension list. Subsystem 0 is the
// leftmost tensor factor and basis ordering is big-endian, i.e. for qubits
// |b0 b1 b2> sits at index b0*4 + b1*2 + b2.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entbounds/tolerances.hpp"

namespace entbounds {

template <typename Scalar = double>
using ComplexMatrix =
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar = double>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ComplexMatrixXd = ComplexMatrix<double>;
using ComplexVectorXd = ComplexVector<double>;

using Dims = std::vector<Eigen::Index>;

namespace detail {

inline Eigen::Index total_dimension(const Dims& dims) {
  Eigen::Index d = 1;
  for (Eigen::Index dk : dims) d *= dk;
  return d;
}

/// Stride of each subsystem digit in the flat big-endian index.
inline std::vector<Eigen::Index> subsystem_strides(const Dims& dims) {
  std::vector<Eigen::Index> strides(dims.size());
  Eigen::Index acc = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = acc;
    acc *= dims[k];
  }
  return strides;
}

/// Expand an index packed over `subset` (ascending subsystem positions) into
/// the corresponding flat index contribution of the full system.
inline Eigen::Index spread_index(Eigen::Index packed,
                                 const std::vector<int>& subset,
                                 const Dims& dims,
                                 const std::vector<Eigen::Index>& strides) {
  Eigen::Index full = 0;
  for (std::size_t j = subset.size(); j-- > 0;) {
    const int k = subset[j];
    full += (packed % dims[k]) * strides[k];
    packed /= dims[k];
  }
  return full;
}

inline void check_square(Eigen::Index rows, Eigen::Index cols,
                         const char* who) {
  if (rows != cols)
    throw std::domain_error(std::string(who) + ": matrix must be square");
}

inline void check_dims_match(const Dims& dims, Eigen::Index side,
                             const char* who) {
  if (dims.empty())
    throw std::domain_error(std::string(who) + ": empty dimension list");
  if (total_dimension(dims) != side)
    throw std::domain_error(std::string(who) +
                            ": dimension list does not match matrix size");
}

/// Sorts, deduplicates and range-checks a subsystem index set.
inline std::vector<int> canonical_subset(std::vector<int> subset,
                                         std::size_t subsystem_count,
                                         const char* who) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (int k : subset)
    if (k < 0 || static_cast<std::size_t>(k) >= subsystem_count)
      throw std::domain_error(std::string(who) + ": subsystem index " +
                              std::to_string(k) + " out of range");
  return subset;
}

}  // namespace detail

/// Entrywise Hermiticity test: max |m - m^dagger| <= tol.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.derived() - m.derived().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Kronecker product a (x) b with a as the slower (big-endian) factor.
template <typename DerivedA, typename DerivedB>
auto tensor_product(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.derived();
  return out;
}

/// Reduced matrix on the kept subsystems, summing out the complement.
/// Kept subsystems retain their original relative order.
template <typename Derived>
auto partial_trace(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
                   std::vector<int> keep) {
  using Scalar = typename Derived::Scalar;
  detail::check_square(m.rows(), m.cols(), "partial_trace");
  detail::check_dims_match(dims, m.rows(), "partial_trace");
  if (keep.empty())
    throw std::domain_error("partial_trace: keep set must be nonempty");
  keep = detail::canonical_subset(std::move(keep), dims.size(),
                                  "partial_trace");

  std::vector<int> traced;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (!std::binary_search(keep.begin(), keep.end(), static_cast<int>(k)))
      traced.push_back(static_cast<int>(k));

  const auto strides = detail::subsystem_strides(dims);
  Eigen::Index kept_dim = 1, traced_dim = 1;
  for (int k : keep) kept_dim *= dims[k];
  for (int k : traced) traced_dim *= dims[k];

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(kept_dim,
                                                                  kept_dim);
  for (Eigen::Index rk = 0; rk < kept_dim; ++rk) {
    const Eigen::Index rbase = detail::spread_index(rk, keep, dims, strides);
    for (Eigen::Index ck = 0; ck < kept_dim; ++ck) {
      const Eigen::Index cbase = detail::spread_index(ck, keep, dims, strides);
      Scalar sum{};
      for (Eigen::Index tm = 0; tm < traced_dim; ++tm) {
        const Eigen::Index off =
            detail::spread_index(tm, traced, dims, strides);
        sum += m(rbase + off, cbase + off);
      }
      out(rk, ck) = sum;
    }
  }
  return out;
}

/// Transposes the indices of one subsystem, leaving the rest untouched.
/// A pure entry permutation, hence an exact involution.
template <typename Derived>
auto partial_transpose(const Eigen::MatrixBase<Derived>& m, const Dims& dims,
                       int subsystem) {
  using Scalar = typename Derived::Scalar;
  detail::check_square(m.rows(), m.cols(), "partial_transpose");
  detail::check_dims_match(dims, m.rows(), "partial_transpose");
  if (subsystem < 0 || static_cast<std::size_t>(subsystem) >= dims.size())
    throw std::domain_error("partial_transpose: subsystem index out of range");

  const auto strides = detail::subsystem_strides(dims);
  const Eigen::Index stride = strides[subsystem];
  const Eigen::Index dk = dims[subsystem];

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(),
                                                            m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const Eigen::Index rd = (r / stride) % dk;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Eigen::Index cd = (c / stride) % dk;
      out(r + (cd - rd) * stride, c + (rd - cd) * stride) = m(r, c);
    }
  }
  return out;
}

/// Full real spectrum of a Hermitian matrix, ascending. Input must be
/// Hermitian within `tol`; the matrix is symmetrized before solving so the
/// returned values are exactly real.
template <typename Derived>
auto hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& m,
    double tol = default_tolerances().hermitian_input) {
  using MatrixType =
      Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  detail::check_square(m.rows(), m.cols(), "hermitian_eigenvalues");
  if (!is_hermitian(m, tol))
    throw std::domain_error("hermitian_eigenvalues: input is not Hermitian");
  const MatrixType sym =
      (m.derived() + m.derived().adjoint()) / typename Derived::RealScalar(2);
  Eigen::SelfAdjointEigenSolver<MatrixType> solver(sym,
                                                   Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: solver did not converge");
  return solver.eigenvalues().eval();
}

/// Trace norm ||m|| = Tr sqrt(m m^dagger), the sum of singular values.
/// Hermitian inputs take the absolute-eigenvalue path; general square inputs
/// fall back to the spectrum of m m^dagger.
template <typename Derived>
auto trace_norm(const Eigen::MatrixBase<Derived>& m) {
  using RealScalar = typename Derived::RealScalar;
  detail::check_square(m.rows(), m.cols(), "trace_norm");
  if (is_hermitian(m, default_tolerances().hermitian_input))
    return hermitian_eigenvalues(m).cwiseAbs().sum();
  const auto gram = (m.derived() * m.derived().adjoint()).eval();
  const auto eigs = hermitian_eigenvalues(gram);
  RealScalar sum{};
  for (Eigen::Index i = 0; i < eigs.size(); ++i)
    sum += std::sqrt(std::max(RealScalar(0), eigs[i]));
  return sum;
}

}  // namespace entbounds
