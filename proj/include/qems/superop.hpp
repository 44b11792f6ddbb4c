#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <stdexcept>
#include <string>
#include <vector>

#include "qems/constants.hpp"
#include "qems/operators.hpp"

namespace qems {

using SparseMatrix = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

/// D^2 x D^2 matrix acting on column-stacked density matrices. Stored
/// sparse; Liouvillians for the default layout are ~0.3% dense.
struct Superoperator {
  HilbertLayout layout;
  SparseMatrix mat;

  int dim() const { return static_cast<int>(mat.rows()); }

  Matrix dense() const { return Matrix(mat); }

  /// Apply to a density matrix and return d(rho)/dt as a matrix.
  QuantumOperator apply(const QuantumOperator& rho) const {
    Vector v = mat * vectorize(rho);
    return devectorize(v, layout);
  }
};

namespace detail {

/// Triplets of -i (I (x) H  -  H^T (x) I), the commutator superoperator.
inline void commutator_triplets(const Matrix& h, std::vector<Triplet>& out) {
  const int d = static_cast<int>(h.rows());
  const Complex mi(0.0, -1.0);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      Complex v = h(i, j);
      if (v == 0.0) continue;
      for (int k = 0; k < d; ++k) {
        out.emplace_back(k * d + i, k * d + j, mi * v);          // I (x) H
        out.emplace_back(i * d + k, j * d + k, -mi * conj(v));   // -(H^T (x) I), H^T(i,j)=H(j,i); Hermitian H assumed checked by caller
      }
    }
}

/// Triplets of rate * ( conj(A) (x) A - (I (x) A^dag A + (A^dag A)^T (x) I)/2 ).
inline void dissipator_triplets(const Matrix& a, double rate, std::vector<Triplet>& out) {
  const int d = static_cast<int>(a.rows());
  struct Nz { int i, j; Complex v; };
  std::vector<Nz> nz;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      if (a(i, j) != 0.0) nz.push_back({i, j, a(i, j)});

  // conj(A) (x) A term: entry ((p*d+q),(r*d+s)) = conj(A(p,r)) A(q,s)
  for (const Nz& x : nz)        // x -> A(p, r)
    for (const Nz& y : nz)      // y -> A(q, s)
      out.emplace_back(x.i * d + y.i, x.j * d + y.j, rate * conj(x.v) * y.v);

  Matrix ada = a.adjoint() * a;
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      Complex v = ada(i, j);
      if (v == 0.0) continue;
      for (int k = 0; k < d; ++k) {
        out.emplace_back(k * d + i, k * d + j, -0.5 * rate * v);          // I (x) A^dag A
        out.emplace_back(i * d + k, j * d + k, -0.5 * rate * conj(v));    // (A^dag A)^T (x) I
      }
    }
}

inline Superoperator from_triplets(const HilbertLayout& layout,
                                   std::vector<Triplet>& trips) {
  const int d2 = layout.total() * layout.total();
  SparseMatrix m(d2, d2);
  m.setFromTriplets(trips.begin(), trips.end());
  m.prune(0.0, 0.0);
  return {layout, std::move(m)};
}

}  // namespace detail

/// Collapse superoperator D[A]: rho -> A rho A^dag - {A^dag A, rho}/2,
/// in the column-stacking convention.
inline Superoperator dissipator(const QuantumOperator& a, double rate = 1.0) {
  std::vector<Triplet> trips;
  detail::dissipator_triplets(a.mat, rate, trips);
  return detail::from_triplets(a.layout, trips);
}

/// Coherent part -i[H, .] (hbar = 1). H must be Hermitian.
inline Superoperator hamiltonian_part(const QuantumOperator& h,
                                      const Tolerances& tol = {}) {
  double err = hermiticity_error(h.mat);
  if (err > tol.hermiticity)
    throw std::invalid_argument(
        "hamiltonian_part: H is not Hermitian (relative Frobenius deviation " +
        std::to_string(err) + ")");
  // Symmetrize so the superoperator is built from an exactly Hermitian matrix.
  Matrix hs = 0.5 * (h.mat + h.mat.adjoint());
  std::vector<Triplet> trips;
  detail::commutator_triplets(hs, trips);
  return detail::from_triplets(h.layout, trips);
}

/// |vec(I)^dag L| / ||L||_F: zero for any trace-preserving generator.
inline double trace_preservation_error(const Superoperator& l) {
  const int d = l.layout.total();
  Vector tr_row = Vector::Zero(static_cast<long>(d) * d);
  for (int k = 0; k < d; ++k) tr_row(static_cast<long>(k) * d + k) = 1.0;
  double num = (l.mat.adjoint() * tr_row).norm();
  double den = l.mat.norm();
  return den == 0.0 ? num : num / den;
}

}  // namespace qems
