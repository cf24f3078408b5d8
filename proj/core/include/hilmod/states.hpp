// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HILMOD_STATES_HPP
#define HILMOD_STATES_HPP

#include "hilmod/algebra.hpp"

namespace hilmod {

// Normal state phi on the algebra, held as a density matrix rho:
// phi(a) = trace(rho a). On M_n(C) this representation is exhaustive.
// Diagonal rho doubles as a probability weight vector for the commutative
// descriptor.
class NormalState {
public:
  /// Validates rho: Hermitian (1e-12), PSD (min eigenvalue >= -1e-12),
  /// unit trace (1e-12), diagonal under a commutative descriptor.
  NormalState(AlgebraDescriptor desc, Matrix rho);

  /// rho = I/n.
  static NormalState uniform(AlgebraDescriptor desc);
  /// rho = E_kk (k is 1-based).
  static NormalState vector_preset(AlgebraDescriptor desc, int k);
  /// Diagonal weights proportional to r^j, normalized. 0 < r < 1.
  static NormalState geometric(AlgebraDescriptor desc, double r);
  /// Diagonal state with the given weights (must sum to 1 within 1e-9).
  static NormalState diagonal(AlgebraDescriptor desc, const std::vector<double>& weights);

  const AlgebraDescriptor& descriptor() const noexcept { return desc_; }
  const Matrix& rho() const noexcept { return rho_; }

private:
  AlgebraDescriptor desc_;
  Matrix rho_;
};

/// phi(a) = trace(rho a).
Complex eval(const NormalState& phi, const AlgebraElement& a);

/// phi(a) restricted to Hermitian arguments; convenience returning the real
/// part (the imaginary part is rounding noise there).
double eval_real(const NormalState& phi, const AlgebraElement& a);

/// Vector state rho = psi psi^*, phi(a) = <a psi, psi>.
NormalState vector_state(AlgebraDescriptor desc, const CVector& psi);

/// For Hermitian PSD a: the vector state at a top eigenvector, which
/// attains eval(phi, a) = ||a|| exactly (finite dimension). For a
/// commutative descriptor the state is the matching diagonal point mass.
NormalState norm_attaining_state(const AlgebraElement& a);

}  // namespace hilmod

#endif  // HILMOD_STATES_HPP
