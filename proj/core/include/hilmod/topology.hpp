// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HILMOD_TOPOLOGY_HPP
#define HILMOD_TOPOLOGY_HPP

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hilmod/module_vector.hpp"
#include "hilmod/states.hpp"

namespace hilmod {

/// Sum of nonnegative terms by pairwise reduction. Seminorm evaluations
/// accumulate |.|^2 over as many as ~10^3 slots; pairwise order keeps the
/// digits the 1e-9 invariant tolerances need.
double pairwise_sum(std::span<const double> terms);

/// Admissibility of a weight sequence under phi:
/// max_j phi(eta_j^* eta_j) = 1 within 1e-9 (the sup is attained at finite
/// truncation).
bool is_admissible(const NormalState& phi, const std::vector<AlgebraElement>& eta);

/// Per-slot normalization zeta_j = eta_j / phi(eta_j^* eta_j)^{1/2}; slots
/// with phi-mass below 1e-14 map to zero. Throws DegenerateWeightsError if
/// every slot is null under phi.
std::vector<AlgebraElement> normalize_admissible(const NormalState& phi,
                                                 const std::vector<AlgebraElement>& eta);

// A seminorm on A^N, one of the four families:
//   tau1:        p(x) = |phi(<y,x>)|                        (weak PF functional)
//   tau:         p(x) = sqrt(sum_j |phi(eta_j^* xi_j)|^2)   (admissible weights)
//   tau2:        p(x) = phi(<x,x>)^{1/2}                    (strong PF)
//   generalized: p(x) = sqrt(sum_j |phi(<z_j,x>)|^2)        (orthogonal family)
// Specs are immutable; evaluation is pure.
class SeminormSpec {
public:
  enum class Kind { tau1, tau, tau2, generalized };

  struct Tau1Data {
    ModuleVector y;
  };
  struct TauData {
    std::vector<AlgebraElement> weights;
  };
  struct Tau2Data {};
  struct GeneralizedData {
    std::vector<ModuleVector> family;
    bool normalized = true;  // max_j phi(<z_j,z_j>) = 1 was enforced
  };

  static SeminormSpec tau1(NormalState phi, ModuleVector y);
  /// Validates admissibility of the weights under phi.
  static SeminormSpec tau(NormalState phi, std::vector<AlgebraElement> weights);
  static SeminormSpec tau2(NormalState phi);
  /// Validates pairwise orthogonality (1e-10) and, when `require_normalized`,
  /// max_j phi(<z_j,z_j>) = 1 within 1e-9. The witness construction records
  /// its proof seminorm with require_normalized = false: that family is
  /// dominated by an admissible seminorm rather than normalized itself.
  static SeminormSpec generalized(NormalState phi, std::vector<ModuleVector> family,
                                  bool require_normalized = true);

  Kind kind() const noexcept { return kind_; }
  const NormalState& phi() const noexcept { return phi_; }
  std::string kind_name() const;

  const Tau1Data* tau1_data() const noexcept { return std::get_if<Tau1Data>(&data_); }
  const TauData* tau_data() const noexcept { return std::get_if<TauData>(&data_); }
  const GeneralizedData* generalized_data() const noexcept {
    return std::get_if<GeneralizedData>(&data_);
  }

  /// p(x).
  double evaluate(const ModuleVector& x) const;
  /// d(x, y) = p(x - y).
  double distance(const ModuleVector& x, const ModuleVector& y) const;

private:
  SeminormSpec(Kind kind, NormalState phi,
               std::variant<Tau1Data, TauData, Tau2Data, GeneralizedData> data)
      : kind_(kind), phi_(std::move(phi)), data_(std::move(data)) {}

  Kind kind_;
  NormalState phi_;
  std::variant<Tau1Data, TauData, Tau2Data, GeneralizedData> data_;
};

/// p_{phi,y}(x) = sqrt(sum_j |phi(eta_j^* xi_j)|^2) for admissible weights.
double p_tau(const SeminormSpec& spec, const ModuleVector& x);

/// |phi(<y,x>)|.
double p_tau1(const NormalState& phi, const ModuleVector& y, const ModuleVector& x);

/// phi(<x,x>)^{1/2}; always <= module_norm(x).
double p_tau2(const NormalState& phi, const ModuleVector& x);

/// sqrt(sum_j |phi(<z_j,x>)|^2) over an orthogonal family.
double p_generalized(const SeminormSpec& spec, const ModuleVector& x);

}  // namespace hilmod

#endif  // HILMOD_TOPOLOGY_HPP
