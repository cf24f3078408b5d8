// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#include "hilmod/algebra.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace hilmod {

namespace {

bool entries_finite(const Matrix& m) {
  return m.allFinite();
}

bool is_diagonal(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}

}  // namespace

AlgebraElement::AlgebraElement(AlgebraDescriptor desc, Matrix entries)
    : desc_(desc), m_(std::move(entries)) {
  if (desc_.dim < 1) throw DimensionError("algebra dimension must be >= 1");
  if (m_.rows() != desc_.dim || m_.cols() != desc_.dim)
    throw DimensionError("entries are " + std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()) + ", descriptor wants " +
                         std::to_string(desc_.dim));
  if (!entries_finite(m_)) throw DomainError("algebra element has non-finite entries");
  if (desc_.commutative && !is_diagonal(m_))
    throw DomainError("commutative descriptor requires diagonal entries");
}

AlgebraElement AlgebraElement::zero(AlgebraDescriptor desc) {
  return AlgebraElement(desc, Matrix::Zero(desc.dim, desc.dim));
}

AlgebraElement AlgebraElement::unit(AlgebraDescriptor desc) {
  return AlgebraElement(desc, Matrix::Identity(desc.dim, desc.dim));
}

AlgebraElement AlgebraElement::diagonal_unit(AlgebraDescriptor desc, int j) {
  if (j < 1 || j > desc.dim)
    throw DimensionError("diagonal unit index " + std::to_string(j) + " out of range");
  Matrix m = Matrix::Zero(desc.dim, desc.dim);
  m(j - 1, j - 1) = Complex(1.0, 0.0);
  return AlgebraElement(desc, std::move(m));
}

AlgebraElement AlgebraElement::adjoint() const {
  return AlgebraElement(desc_, m_.adjoint());
}

bool AlgebraElement::is_zero(double tol) const {
  return m_.cwiseAbs().maxCoeff() <= tol;
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (!(a.descriptor() == b.descriptor()))
    throw DimensionError("algebra descriptor mismatch");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  return AlgebraElement(a.descriptor(), a.m_ + b.m_);
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  return AlgebraElement(a.descriptor(), a.m_ - b.m_);
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  return AlgebraElement(a.descriptor(), a.m_ * b.m_);
}

AlgebraElement operator*(Complex lambda, const AlgebraElement& a) {
  return AlgebraElement(a.descriptor(), lambda * a.m_);
}

AlgebraElement operator*(const AlgebraElement& a, Complex lambda) {
  return lambda * a;
}

AlgebraElement AlgebraElement::operator-() const {
  return AlgebraElement(desc_, -m_);
}

namespace detail {

namespace {

double power_iteration_norm(const Matrix& m, double tol) {
  constexpr int kMaxIter = 100000;
  const Eigen::Index n = m.cols();
  if (n == 0) return 0.0;
  const Matrix gram = m.adjoint() * m;
  // Fixed deterministic start with mass on every coordinate.
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v(i) = Complex(1.0, 1.0 / static_cast<double>(i + 2));
  v.normalize();
  double lambda = 0.0;
  double residual = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    CVector w = gram * v;
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    w /= wn;
    lambda = std::real(w.dot(gram * w));
    residual = (gram * w - lambda * w).norm();
    v.swap(w);
    if (residual <= tol * std::max(1.0, lambda)) return std::sqrt(std::max(0.0, lambda));
  }
  throw NumericError("power iteration did not converge", residual);
}

}  // namespace

double spectral_norm(const Matrix& m, double tol) {
  if (m.size() == 0) return 0.0;
  if (m.cols() > 2048) return power_iteration_norm(m, tol);
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) return power_iteration_norm(m, tol);
  const double lmax = es.eigenvalues().maxCoeff();
  return std::sqrt(std::max(0.0, lmax));
}

CVector top_singular_vector(const Matrix& m, double rel_gap) {
  const Eigen::Index n = m.cols();
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (es.info() != Eigen::Success)
    throw NumericError("eigendecomposition failed in top_singular_vector", 0.0);
  const auto& evals = es.eigenvalues();  // ascending
  const double lmax = evals(n - 1);
  if (lmax <= 0.0) {
    CVector e1 = CVector::Zero(n);
    e1(0) = Complex(1.0, 0.0);
    return e1;
  }
  const double cut = lmax * (1.0 - rel_gap);
  Eigen::Index lo = n - 1;
  while (lo > 0 && evals(lo - 1) >= cut) --lo;
  const Eigen::Index k = n - lo;  // multiplicity of the (near-)top group
  const auto basis = es.eigenvectors().rightCols(k);
  // Project successive standard basis vectors until one has real mass in
  // the subspace; preferring early coordinates keeps the witness iteration
  // from wasting truncation room when the top singular value is degenerate.
  for (Eigen::Index j = 0; j < n; ++j) {
    CVector coeff = basis.adjoint().col(j);  // = basis^H e_j
    const double mass = coeff.norm();
    if (mass > 1e-8) {
      CVector v = basis * coeff;
      v /= v.norm();
      return v;
    }
  }
  return basis.col(k - 1);
}

}  // namespace detail

double operator_norm_alg(const AlgebraElement& a, double tol) {
  return detail::spectral_norm(a.entries(), tol);
}

std::pair<double, CVector> top_eigenpair(const AlgebraElement& a, double tol) {
  const Matrix& m = a.entries();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > std::max(tol, 1e-12) * scale)
    throw DomainError("top_eigenpair requires a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success)
    throw NumericError("Hermitian eigendecomposition failed", 0.0);
  const auto& evals = es.eigenvalues();
  if (evals(0) < -std::max(tol, 1e-12) * scale)
    throw DomainError("top_eigenpair requires a positive semidefinite matrix");
  const Eigen::Index n = m.rows();
  return {evals(n - 1), es.eigenvectors().col(n - 1)};
}

AlgebraElement unitary_from_to(const CVector& psi, const CVector& h) {
  if (psi.size() != h.size()) throw DimensionError("unitary_from_to: size mismatch");
  const Eigen::Index n = psi.size();
  if (std::abs(psi.norm() - 1.0) > 1e-8 || std::abs(h.norm() - 1.0) > 1e-8)
    throw DomainError("unitary_from_to requires unit vectors");
  const AlgebraDescriptor desc{static_cast<int>(n), false};

  if ((psi - h).norm() < 1e-14) return AlgebraElement::unit(desc);

  const Complex alpha = psi.dot(h);  // <psi, h>, conjugate-linear in psi
  CVector r = h - alpha * psi;
  if (r.norm() <= 1e-8) {
    // h is a phase multiple of psi: rotate the phase on span{psi} only.
    const Complex phase = alpha / std::abs(alpha);
    Matrix u = Matrix::Identity(n, n) + (phase - 1.0) * (psi * psi.adjoint());
    return AlgebraElement(desc, std::move(u));
  }
  CVector w = r / r.norm();
  w -= psi * psi.dot(w);  // re-orthogonalize once
  w /= w.norm();
  const Complex beta = w.dot(h);
  // Orthonormal image frame {h, h_perp} over the source frame {psi, w}.
  CVector hperp = -std::conj(beta) * psi + std::conj(alpha) * w;
  hperp /= hperp.norm();
  Matrix u = Matrix::Identity(n, n);
  u -= psi * psi.adjoint();
  u -= w * w.adjoint();
  u += h * psi.adjoint();
  u += hperp * w.adjoint();
  return AlgebraElement(desc, std::move(u));
}

AlgebraElement random_unitary(AlgebraDescriptor desc, std::uint64_t seed) {
  Rng rng(seed);
  const int n = desc.dim;
  if (desc.commutative) {
    Matrix m = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = rng.unit_phase();
    return AlgebraElement(desc, std::move(m));
  }
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double ad = std::abs(d);
    q.col(j) *= (ad > 0.0) ? std::conj(d) / ad : Complex(1.0, 0.0);
  }
  return AlgebraElement(desc, std::move(q));
}

}  // namespace hilmod
