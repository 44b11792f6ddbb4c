#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qems/hilbert.hpp"

namespace qems {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Complex matrix living on a labeled tensor-product space. Carrier for
/// Hamiltonians, collapse operators and density matrices. Value type,
/// immutable by convention after construction.
struct QuantumOperator {
  HilbertLayout layout;
  Matrix mat;

  QuantumOperator() = default;
  QuantumOperator(HilbertLayout l, Matrix m) : layout(std::move(l)), mat(std::move(m)) {
    if (mat.rows() != mat.cols())
      throw std::invalid_argument("QuantumOperator: matrix must be square");
    if (mat.rows() != layout.total())
      throw std::invalid_argument("QuantumOperator: matrix side " +
                                  std::to_string(mat.rows()) +
                                  " does not match layout dimension " +
                                  std::to_string(layout.total()));
  }

  int dim() const { return static_cast<int>(mat.rows()); }

  QuantumOperator adjoint() const { return {layout, mat.adjoint()}; }
};

inline HilbertLayout single_mode_layout(int d, const std::string& label = "mode") {
  return HilbertLayout({d}, {label});
}

/// ||M - M^dag||_F / ||M||_F (0 for the zero matrix).
inline double hermiticity_error(const Matrix& m) {
  double norm = m.norm();
  if (norm == 0.0) return 0.0;
  return (m - m.adjoint()).norm() / norm;
}

/// Bosonic annihilation operator on a d-level truncated Fock space:
/// <n-1|a|n> = sqrt(n).
inline QuantumOperator annihilation(int d) {
  if (d < 2) throw std::invalid_argument("annihilation: dimension must be >= 2");
  Matrix a = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(double(n));
  return {single_mode_layout(d), std::move(a)};
}

/// Number operator a^dag a on a d-level space.
inline QuantumOperator number_operator(int d) {
  if (d < 2) throw std::invalid_argument("number_operator: dimension must be >= 2");
  Matrix n = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = double(k);
  return {single_mode_layout(d), std::move(n)};
}

/// |l><m| on a d-level space.
inline QuantumOperator transition(int l, int m, int d) {
  if (l < 0 || m < 0 || l >= d || m >= d)
    throw std::invalid_argument("transition: level index out of range");
  Matrix p = Matrix::Zero(d, d);
  p(l, m) = 1.0;
  return {single_mode_layout(d), std::move(p)};
}

inline QuantumOperator identity_operator(const HilbertLayout& layout) {
  return {layout, Matrix::Identity(layout.total(), layout.total())};
}

/// Lift a single-subsystem operator to the full space:
/// I (x) ... (x) op (x) ... (x) I with op at position `index`.
inline QuantumOperator embed(const QuantumOperator& op, int index,
                             const HilbertLayout& layout) {
  if (index < 0 || index >= layout.subsystems())
    throw std::invalid_argument("embed: subsystem index out of range");
  if (op.dim() != layout.dims[index])
    throw std::invalid_argument(
        "embed: operator dimension " + std::to_string(op.dim()) +
        " does not match subsystem dimension " +
        std::to_string(layout.dims[index]));

  int before = 1, after = 1;
  for (int k = 0; k < index; ++k) before *= layout.dims[k];
  for (int k = index + 1; k < layout.subsystems(); ++k) after *= layout.dims[k];
  const int d = op.dim();
  const int total = layout.total();

  Matrix full = Matrix::Zero(total, total);
  for (int b = 0; b < before; ++b)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Complex v = op.mat(i, j);
        if (v == 0.0) continue;
        int row0 = (b * d + i) * after;
        int col0 = (b * d + j) * after;
        for (int a = 0; a < after; ++a) full(row0 + a, col0 + a) = v;
      }
  return {layout, std::move(full)};
}

/// tr(rho A). Real to solver precision when A is Hermitian and rho a state.
inline Complex expectation(const QuantumOperator& rho, const QuantumOperator& A) {
  if (rho.dim() != A.dim())
    throw std::invalid_argument("expectation: shape mismatch");
  return rho.mat.transpose().cwiseProduct(A.mat).sum();
}

/// Column-stacking vectorization: vec(rho)(j*D + i) = rho(i, j), so that
/// vec(A rho B) = (B^T (x) A) vec(rho).
inline Vector vectorize(const QuantumOperator& rho) {
  return Eigen::Map<const Vector>(rho.mat.data(), rho.mat.size());
}

inline QuantumOperator devectorize(const Vector& v, const HilbertLayout& layout) {
  const int d = layout.total();
  if (v.size() != static_cast<long>(d) * d)
    throw std::invalid_argument("devectorize: length is not the square of the layout dimension");
  Matrix m = Eigen::Map<const Matrix>(v.data(), d, d);
  return {layout, std::move(m)};
}

}  // namespace qems
