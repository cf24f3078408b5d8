// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HILMOD_ALGEBRA_HPP
#define HILMOD_ALGEBRA_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <utility>

#include "hilmod/errors.hpp"
#include "hilmod/rng.hpp"

namespace hilmod {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Finite-dimensional W*-algebra: M_n(C), or its diagonal (commutative)
// subalgebra when `commutative` is set. Every element carries a descriptor
// and all binary operations require matching descriptors.
struct AlgebraDescriptor {
  int dim = 1;
  bool commutative = false;

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

/// An element of the algebra: an n-by-n complex matrix, diagonal when the
/// descriptor is commutative. Immutable after construction.
class AlgebraElement {
public:
  /// Validates conformance: square n-by-n, finite entries, diagonal if the
  /// descriptor says so.
  AlgebraElement(AlgebraDescriptor desc, Matrix entries);

  static AlgebraElement zero(AlgebraDescriptor desc);
  static AlgebraElement unit(AlgebraDescriptor desc);
  /// Diagonal matrix unit E_jj (j is 1-based).
  static AlgebraElement diagonal_unit(AlgebraDescriptor desc, int j);

  const AlgebraDescriptor& descriptor() const noexcept { return desc_; }
  const Matrix& entries() const noexcept { return m_; }
  int dim() const noexcept { return desc_.dim; }

  AlgebraElement adjoint() const;
  bool is_zero(double tol = 0.0) const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(Complex lambda, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, Complex lambda);
  AlgebraElement operator-() const;

private:
  AlgebraDescriptor desc_;
  Matrix m_;
};

/// Throws DimensionError unless a and b live in the same algebra.
void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b);

/// C*-norm of a: the largest singular value, absolute error <= tol.
/// Computed by Hermitian eigendecomposition of a*a; the power-iteration
/// fallback (cap 1e5 iterations) only runs if the direct solve fails, and
/// throws NumericError with the last residual if it does not converge.
double operator_norm_alg(const AlgebraElement& a, double tol = 1e-12);

/// Largest eigenpair (lambda_max, h) of a Hermitian positive semidefinite
/// element, with ||a h - lambda h|| <= tol and ||h|| = 1.
/// Throws DomainError if a is not Hermitian PSD within tol.
std::pair<double, CVector> top_eigenpair(const AlgebraElement& a, double tol = 1e-10);

/// Unitary u with u * psi = h for unit vectors psi, h. Identity on the
/// orthogonal complement of span{psi, h}. Returns the identity when
/// ||psi - h|| < 1e-14.
AlgebraElement unitary_from_to(const CVector& psi, const CVector& h);

/// Haar-like random unitary, deterministic in the seed: orthonormalized
/// complex Gaussian matrix with the QR phase fixed. For a commutative
/// descriptor, a diagonal matrix of uniform unimodular phases.
AlgebraElement random_unitary(AlgebraDescriptor desc, std::uint64_t seed);

namespace detail {
/// Spectral norm of an arbitrary complex matrix (shared with the operator
/// layer). Eigendecomposition of m^H m when the size permits, power
/// iteration beyond that.
double spectral_norm(const Matrix& m, double tol);

/// Unit vector spanning the "earliest" direction of the top singular
/// subspace of m: eigenvectors of m^H m whose eigenvalue is within rel_gap
/// of the maximum are grouped, and the returned vector is the normalized
/// projection of the first standard basis vector with non-negligible
/// component in that subspace. Deterministic, and collapses to the unique
/// top singular vector when the gap is simple.
CVector top_singular_vector(const Matrix& m, double rel_gap = 1e-9);
}  // namespace detail

}  // namespace hilmod

#endif  // HILMOD_ALGEBRA_HPP
