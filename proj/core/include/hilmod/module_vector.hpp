// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HILMOD_MODULE_VECTOR_HPP
#define HILMOD_MODULE_VECTOR_HPP

#include <vector>

#include "hilmod/algebra.hpp"

namespace hilmod {

// Element of the truncated standard Hilbert module A^N: a sequence
// (xi_1, ..., xi_N) of algebra elements. The A-valued inner product is
// <x,y> = sum_j xi_j^* eta_j, conjugate-linear in the first slot. Slots are
// addressed 1-based in the public interface, matching the usual sequence
// notation; storage is a plain vector.
class ModuleVector {
public:
  /// All entries must share a descriptor; N >= 1.
  explicit ModuleVector(std::vector<AlgebraElement> entries);

  static ModuleVector zero(AlgebraDescriptor desc, int truncation);

  const AlgebraDescriptor& descriptor() const noexcept { return desc_; }
  int truncation() const noexcept { return static_cast<int>(entries_.size()); }

  /// Slot access, j in 1..N.
  const AlgebraElement& slot(int j) const;
  const std::vector<AlgebraElement>& entries() const noexcept { return entries_; }

  friend ModuleVector operator+(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator-(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator*(Complex lambda, const ModuleVector& x);
  ModuleVector operator-() const;

private:
  AlgebraDescriptor desc_;
  std::vector<AlgebraElement> entries_;
};

void require_compatible(const ModuleVector& x, const ModuleVector& y);

/// <x,y> = sum_j xi_j^* eta_j.
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

/// ||x|| = ||<x,x>||^{1/2}.
double module_norm(const ModuleVector& x);

/// Vector with `a` in slot j (1-based) and zeros elsewhere.
ModuleVector basis_vector(int truncation, int j, const AlgebraElement& a);

/// e_j: unit of the algebra in slot j.
ModuleVector basis_vector(AlgebraDescriptor desc, int truncation, int j);

/// Keeps slots 1..k, zeroes the rest; k = 0 gives the zero vector.
ModuleVector coord_project(int k, const ModuleVector& x);

/// Module action: (xi_j a)_j.
ModuleVector right_mul(const ModuleVector& x, const AlgebraElement& a);

/// Embeds a unit vector v of length n*N as a module vector of norm one:
/// slot j holds the matrix whose first column is the j-th length-n block of
/// v. Then <x,x> = E_11, and if v is a top right-singular vector of a
/// flattened operator S the image vector attains ||S|| in module norm. This
/// is the bridge between Euclidean singular vectors and module vectors.
ModuleVector rank_one_from_unit(AlgebraDescriptor desc, const CVector& v);

}  // namespace hilmod

#endif  // HILMOD_MODULE_VECTOR_HPP
