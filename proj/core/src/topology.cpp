// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#include "hilmod/topology.hpp"

#include <cmath>
#include <string>

namespace hilmod {

double pairwise_sum(std::span<const double> terms) {
  const std::size_t n = terms.size();
  if (n <= 32) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

namespace {

constexpr double kAdmissibleBand = 1e-9;
constexpr double kZeroMass = 1e-14;

double max_weight_mass(const NormalState& phi, const std::vector<AlgebraElement>& eta) {
  double best = 0.0;
  for (const auto& e : eta) {
    const double mass = eval_real(phi, e.adjoint() * e);
    if (mass > best) best = mass;
  }
  return best;
}

double l2_of_terms(std::vector<double>& sq) {
  return std::sqrt(pairwise_sum(sq));
}

}  // namespace

bool is_admissible(const NormalState& phi, const std::vector<AlgebraElement>& eta) {
  if (eta.empty()) return false;
  return std::abs(max_weight_mass(phi, eta) - 1.0) <= kAdmissibleBand;
}

std::vector<AlgebraElement> normalize_admissible(const NormalState& phi,
                                                 const std::vector<AlgebraElement>& eta) {
  std::vector<AlgebraElement> out;
  out.reserve(eta.size());
  bool any = false;
  for (const auto& e : eta) {
    const double mass = eval_real(phi, e.adjoint() * e);
    if (mass > kZeroMass) {
      out.push_back(e * Complex(1.0 / std::sqrt(mass), 0.0));
      any = true;
    } else {
      out.push_back(AlgebraElement::zero(e.descriptor()));
    }
  }
  if (!any) throw DegenerateWeightsError("every weight slot is null under the state");
  return out;
}

SeminormSpec SeminormSpec::tau1(NormalState phi, ModuleVector y) {
  if (!(phi.descriptor() == y.descriptor()))
    throw DimensionError("tau1 spec: state and vector descriptors differ");
  return SeminormSpec(Kind::tau1, std::move(phi), Tau1Data{std::move(y)});
}

SeminormSpec SeminormSpec::tau(NormalState phi, std::vector<AlgebraElement> weights) {
  if (weights.empty()) throw DomainError("tau spec needs a weight sequence");
  for (const auto& w : weights)
    if (!(w.descriptor() == phi.descriptor()))
      throw DimensionError("tau spec: weight descriptor differs from the state");
  if (!is_admissible(phi, weights))
    throw DomainError("tau spec weights are not admissible: max phi(eta^*eta) != 1");
  return SeminormSpec(Kind::tau, std::move(phi), TauData{std::move(weights)});
}

SeminormSpec SeminormSpec::tau2(NormalState phi) {
  return SeminormSpec(Kind::tau2, std::move(phi), Tau2Data{});
}

SeminormSpec SeminormSpec::generalized(NormalState phi, std::vector<ModuleVector> family,
                                       bool require_normalized) {
  if (family.empty()) throw DomainError("generalized spec needs a family");
  for (const auto& z : family)
    if (!(z.descriptor() == phi.descriptor()))
      throw DimensionError("generalized spec: family descriptor differs from the state");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const AlgebraElement g = inner_product(family[i], family[j]);
      if (g.entries().cwiseAbs().maxCoeff() > 1e-10)
        throw DomainError("generalized spec family is not orthogonal");
    }
  double best = 0.0;
  for (const auto& z : family) {
    const double mass = eval_real(phi, inner_product(z, z));
    if (mass > best) best = mass;
  }
  if (require_normalized && std::abs(best - 1.0) > kAdmissibleBand)
    throw DomainError("generalized spec family: max phi(<z,z>) != 1");
  return SeminormSpec(Kind::generalized, std::move(phi),
                      GeneralizedData{std::move(family), require_normalized});
}

std::string SeminormSpec::kind_name() const {
  switch (kind_) {
    case Kind::tau1: return "tau1";
    case Kind::tau: return "tau";
    case Kind::tau2: return "tau2";
    case Kind::generalized: return "generalized";
  }
  return "?";
}

double SeminormSpec::evaluate(const ModuleVector& x) const {
  switch (kind_) {
    case Kind::tau1: return p_tau1(phi_, std::get<Tau1Data>(data_).y, x);
    case Kind::tau: return p_tau(*this, x);
    case Kind::tau2: return p_tau2(phi_, x);
    case Kind::generalized: return p_generalized(*this, x);
  }
  throw Error("unreachable seminorm kind");
}

double SeminormSpec::distance(const ModuleVector& x, const ModuleVector& y) const {
  return evaluate(x - y);
}

double p_tau(const SeminormSpec& spec, const ModuleVector& x) {
  const auto* data = spec.tau_data();
  if (data == nullptr) throw DomainError("p_tau needs a tau spec");
  const auto& eta = data->weights;
  if (static_cast<int>(eta.size()) != x.truncation())
    throw DimensionError("tau spec weight count differs from the vector truncation");
  std::vector<double> sq(eta.size());
  for (std::size_t j = 0; j < eta.size(); ++j) {
    const Complex t =
        eval(spec.phi(), eta[j].adjoint() * x.slot(static_cast<int>(j) + 1));
    sq[j] = std::norm(t);
  }
  return l2_of_terms(sq);
}

double p_tau1(const NormalState& phi, const ModuleVector& y, const ModuleVector& x) {
  return std::abs(eval(phi, inner_product(y, x)));
}

double p_tau2(const NormalState& phi, const ModuleVector& x) {
  return std::sqrt(std::max(0.0, eval_real(phi, inner_product(x, x))));
}

double p_generalized(const SeminormSpec& spec, const ModuleVector& x) {
  const auto* data = spec.generalized_data();
  if (data == nullptr) throw DomainError("p_generalized needs a generalized spec");
  std::vector<double> sq(data->family.size());
  for (std::size_t j = 0; j < data->family.size(); ++j)
    sq[j] = std::norm(eval(spec.phi(), inner_product(data->family[j], x)));
  return l2_of_terms(sq);
}

}  // namespace hilmod
