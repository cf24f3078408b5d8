// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#include "hilmod/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace hilmod {

NormalState::NormalState(AlgebraDescriptor desc, Matrix rho)
    : desc_(desc), rho_(std::move(rho)) {
  if (rho_.rows() != desc_.dim || rho_.cols() != desc_.dim)
    throw DimensionError("density matrix size does not match the descriptor");
  if (!rho_.allFinite()) throw DomainError("density matrix has non-finite entries");
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("density matrix is not Hermitian");
  if (desc_.commutative) {
    for (int i = 0; i < desc_.dim; ++i)
      for (int j = 0; j < desc_.dim; ++j)
        if (i != j && std::abs(rho_(i, j)) > 0.0)
          throw DomainError("commutative descriptor requires a diagonal density");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("density matrix eigendecomposition failed", 0.0);
  if (es.eigenvalues()(0) < -1e-12)
    throw DomainError("density matrix is not positive semidefinite");
  if (std::abs(std::real(rho_.trace()) - 1.0) > 1e-12 || std::abs(std::imag(rho_.trace())) > 1e-12)
    throw DomainError("density matrix trace must be 1");
}

NormalState NormalState::uniform(AlgebraDescriptor desc) {
  return NormalState(desc, Matrix::Identity(desc.dim, desc.dim) / static_cast<double>(desc.dim));
}

NormalState NormalState::vector_preset(AlgebraDescriptor desc, int k) {
  if (k < 1 || k > desc.dim)
    throw ConfigError("vector state index " + std::to_string(k) + " out of range");
  Matrix rho = Matrix::Zero(desc.dim, desc.dim);
  rho(k - 1, k - 1) = Complex(1.0, 0.0);
  return NormalState(desc, std::move(rho));
}

NormalState NormalState::geometric(AlgebraDescriptor desc, double r) {
  if (!(r > 0.0 && r < 1.0)) throw ConfigError("geometric ratio must be in (0,1)");
  std::vector<double> w(static_cast<std::size_t>(desc.dim));
  double p = r;
  for (auto& wi : w) {
    wi = p;
    p *= r;
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& wi : w) wi /= total;
  return diagonal(desc, w);
}

NormalState NormalState::diagonal(AlgebraDescriptor desc, const std::vector<double>& weights) {
  if (static_cast<int>(weights.size()) != desc.dim)
    throw ConfigError("diagonal state needs exactly dim weights");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ConfigError("diagonal state weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ConfigError("diagonal state weights must sum to 1");
  Matrix rho = Matrix::Zero(desc.dim, desc.dim);
  for (int i = 0; i < desc.dim; ++i) rho(i, i) = weights[static_cast<std::size_t>(i)] / total;
  return NormalState(desc, std::move(rho));
}

Complex eval(const NormalState& phi, const AlgebraElement& a) {
  if (!(phi.descriptor() == a.descriptor()))
    throw DimensionError("state and element live in different algebras");
  return (phi.rho() * a.entries()).trace();
}

double eval_real(const NormalState& phi, const AlgebraElement& a) {
  return std::real(eval(phi, a));
}

NormalState vector_state(AlgebraDescriptor desc, const CVector& psi) {
  if (psi.size() != desc.dim) throw DimensionError("vector state size mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-8)
    throw DomainError("vector state requires a unit vector");
  Matrix rho = psi * psi.adjoint();
  // Nudge the trace to exactly 1 so the constructor's invariant holds even
  // when ||psi|| = 1 only up to rounding.
  rho /= std::real(rho.trace());
  return NormalState(desc, std::move(rho));
}

NormalState norm_attaining_state(const AlgebraElement& a) {
  const AlgebraDescriptor desc = a.descriptor();
  if (desc.commutative) {
    // Point mass at the largest diagonal entry; avoids relying on the
    // eigensolver's tie order for degenerate diagonals.
    int best = 0;
    double bestval = -1.0;
    for (int i = 0; i < desc.dim; ++i) {
      const double v = std::real(a.entries()(i, i));
      if (v > bestval) {
        bestval = v;
        best = i;
      }
    }
    if (bestval < -1e-10) throw DomainError("norm_attaining_state requires a positive element");
    return NormalState::vector_preset(desc, best + 1);
  }
  auto [lambda, h] = top_eigenpair(a, 1e-10);
  (void)lambda;
  return vector_state(desc, h);
}

}  // namespace hilmod
