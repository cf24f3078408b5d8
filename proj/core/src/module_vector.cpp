// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#include "hilmod/module_vector.hpp"

#include <cmath>
#include <string>

namespace hilmod {

ModuleVector::ModuleVector(std::vector<AlgebraElement> entries)
    : desc_(), entries_(std::move(entries)) {
  if (entries_.empty()) throw DimensionError("module vector needs at least one slot");
  desc_ = entries_.front().descriptor();
  for (const auto& e : entries_)
    if (!(e.descriptor() == desc_))
      throw DimensionError("module vector entries have mixed descriptors");
}

ModuleVector ModuleVector::zero(AlgebraDescriptor desc, int truncation) {
  if (truncation < 1) throw DimensionError("truncation must be >= 1");
  return ModuleVector(std::vector<AlgebraElement>(
      static_cast<std::size_t>(truncation), AlgebraElement::zero(desc)));
}

const AlgebraElement& ModuleVector::slot(int j) const {
  if (j < 1 || j > truncation())
    throw DimensionError("slot index " + std::to_string(j) + " out of 1.." +
                         std::to_string(truncation()));
  return entries_[static_cast<std::size_t>(j - 1)];
}

void require_compatible(const ModuleVector& x, const ModuleVector& y) {
  if (!(x.descriptor() == y.descriptor()))
    throw DimensionError("module vectors over different algebras");
  if (x.truncation() != y.truncation())
    throw DimensionError("module vectors with different truncations");
}

ModuleVector operator+(const ModuleVector& x, const ModuleVector& y) {
  require_compatible(x, y);
  std::vector<AlgebraElement> out;
  out.reserve(x.entries_.size());
  for (std::size_t j = 0; j < x.entries_.size(); ++j)
    out.push_back(x.entries_[j] + y.entries_[j]);
  return ModuleVector(std::move(out));
}

ModuleVector operator-(const ModuleVector& x, const ModuleVector& y) {
  require_compatible(x, y);
  std::vector<AlgebraElement> out;
  out.reserve(x.entries_.size());
  for (std::size_t j = 0; j < x.entries_.size(); ++j)
    out.push_back(x.entries_[j] - y.entries_[j]);
  return ModuleVector(std::move(out));
}

ModuleVector operator*(Complex lambda, const ModuleVector& x) {
  std::vector<AlgebraElement> out;
  out.reserve(x.entries_.size());
  for (const auto& e : x.entries_) out.push_back(lambda * e);
  return ModuleVector(std::move(out));
}

ModuleVector ModuleVector::operator-() const {
  return Complex(-1.0, 0.0) * *this;
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
  require_compatible(x, y);
  const int n = x.descriptor().dim;
  Matrix acc = Matrix::Zero(n, n);
  for (int j = 1; j <= x.truncation(); ++j)
    acc += x.slot(j).entries().adjoint() * y.slot(j).entries();
  return AlgebraElement(x.descriptor(), std::move(acc));
}

double module_norm(const ModuleVector& x) {
  return std::sqrt(std::max(0.0, operator_norm_alg(inner_product(x, x))));
}

ModuleVector basis_vector(int truncation, int j, const AlgebraElement& a) {
  if (j < 1 || j > truncation)
    throw DimensionError("basis slot " + std::to_string(j) + " out of 1.." +
                         std::to_string(truncation));
  std::vector<AlgebraElement> entries(static_cast<std::size_t>(truncation),
                                      AlgebraElement::zero(a.descriptor()));
  entries[static_cast<std::size_t>(j - 1)] = a;
  return ModuleVector(std::move(entries));
}

ModuleVector basis_vector(AlgebraDescriptor desc, int truncation, int j) {
  return basis_vector(truncation, j, AlgebraElement::unit(desc));
}

ModuleVector coord_project(int k, const ModuleVector& x) {
  if (k < 0 || k > x.truncation())
    throw DimensionError("projection count " + std::to_string(k) + " out of 0.." +
                         std::to_string(x.truncation()));
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<std::size_t>(x.truncation()));
  for (int j = 1; j <= x.truncation(); ++j)
    out.push_back(j <= k ? x.slot(j) : AlgebraElement::zero(x.descriptor()));
  return ModuleVector(std::move(out));
}

ModuleVector right_mul(const ModuleVector& x, const AlgebraElement& a) {
  if (!(x.descriptor() == a.descriptor()))
    throw DimensionError("right_mul: descriptor mismatch");
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<std::size_t>(x.truncation()));
  for (int j = 1; j <= x.truncation(); ++j) out.push_back(x.slot(j) * a);
  return ModuleVector(std::move(out));
}

ModuleVector rank_one_from_unit(AlgebraDescriptor desc, const CVector& v) {
  const int n = desc.dim;
  if (v.size() % n != 0 || v.size() == 0)
    throw DimensionError("flattened vector length is not a multiple of the algebra dim");
  if (std::abs(v.norm() - 1.0) > 1e-8)
    throw DomainError("rank_one_from_unit requires a unit vector");
  if (desc.commutative && n > 1)
    throw DomainError("rank_one_from_unit targets the full matrix algebra");
  const int truncation = static_cast<int>(v.size()) / n;
  std::vector<AlgebraElement> entries;
  entries.reserve(static_cast<std::size_t>(truncation));
  for (int j = 0; j < truncation; ++j) {
    Matrix m = Matrix::Zero(n, n);
    m.col(0) = v.segment(j * n, n);
    entries.emplace_back(desc, std::move(m));
  }
  return ModuleVector(std::move(entries));
}

}  // namespace hilmod
