// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HILMOD_RNG_HPP
#define HILMOD_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace hilmod {

// Seeded random source with fully specified output. mt19937_64 is pinned by
// the standard and the uniform/gaussian transforms below are hand-rolled, so
// a (seed, call sequence) pair produces the same stream on every platform.
// std::normal_distribution is implementation-defined and is not used.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny relative to 2^64.
    return gen_() % n;
  }

  /// Standard normal via Box-Muller.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Standard complex normal, E|z|^2 = 1.
  std::complex<double> gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return {re * 0.7071067811865476, im * 0.7071067811865476};
  }

  /// Unimodular complex number with uniform phase.
  std::complex<double> unit_phase() {
    const double theta = 2.0 * 3.14159265358979323846 * uniform();
    return {std::cos(theta), std::sin(theta)};
  }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// splitmix64 mix; used to derive independent per-trial seeds from a base
/// seed and a trial counter so parallel sampling stays deterministic.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hilmod

#endif  // HILMOD_RNG_HPP
