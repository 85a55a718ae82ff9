#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "braidham/matrix.hpp"

namespace braidham {

/// Input outside the physical domain the construction is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Three-momentum in natural units.
struct Momentum {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  Complex plus() const { return {p1, p2}; }
  Complex minus() const { return {p1, -p2}; }
  double magnitude_squared() const { return p1 * p1 + p2 * p2 + p3 * p3; }
  double magnitude() const { return std::sqrt(magnitude_squared()); }
  bool finite() const { return std::isfinite(p1) && std::isfinite(p2) && std::isfinite(p3); }

  friend Momentum operator*(double s, const Momentum& p) { return {s * p.p1, s * p.p2, s * p.p3}; }
  friend Momentum operator-(const Momentum& p) { return {-p.p1, -p.p2, -p.p3}; }
};

struct DomainFloors {
  double mass = 1e-8;
  double momentum = 1e-8;
};

/// Mass and momentum of a free Dirac particle, with the derived energy
/// E = sqrt(p^2 + m^2) and u(+/-) = sqrt(E +/- m).
class DiracParams {
 public:
  DiracParams(double mass, Momentum momentum, DomainFloors floors = {})
      : mass_(mass), momentum_(momentum) {
    if (!std::isfinite(mass) || !momentum.finite()) {
      throw DomainError("Dirac parameters must be finite");
    }
    if (!(mass >= floors.mass)) {
      throw DomainError("mass " + std::to_string(mass) + " is below the floor " +
                        std::to_string(floors.mass));
    }
    magnitude_ = momentum.magnitude();
    if (!(magnitude_ >= floors.momentum)) {
      throw DomainError("momentum magnitude " + std::to_string(magnitude_) +
                        " is below the floor " + std::to_string(floors.momentum));
    }
    energy_ = std::hypot(magnitude_, mass);
    u_plus_ = std::sqrt(energy_ + mass);
    // E - m suffers cancellation for p << m; u- = p / u+ does not.
    u_minus_ = magnitude_ / u_plus_;
  }

  double mass() const { return mass_; }
  const Momentum& momentum() const { return momentum_; }
  double momentum_magnitude() const { return magnitude_; }
  double energy() const { return energy_; }
  double u_plus() const { return u_plus_; }
  double u_minus() const { return u_minus_; }

 private:
  double mass_;
  Momentum momentum_;
  double magnitude_ = 0.0;
  double energy_ = 0.0;
  double u_plus_ = 0.0;
  double u_minus_ = 0.0;
};

/// Quasiparticle parameters of the superfluid 3He-B Hamiltonian.
struct BogoliubovParams {
  Momentum k;
  double m_qp = 1.0;
  double mu = 0.0;
  double delta_B = 1.0;
  double k_F = 1.0;

  void validate() const {
    if (!(m_qp > 0.0) || !(k_F > 0.0)) {
      throw DomainError("Bogoliubov parameters require m_qp > 0 and k_F > 0");
    }
    if (!k.finite() || !std::isfinite(mu) || !std::isfinite(delta_B) || !std::isfinite(m_qp) ||
        !std::isfinite(k_F)) {
      throw DomainError("Bogoliubov parameters must be finite");
    }
  }

  double mass_term() const { return k.magnitude_squared() / (2.0 * m_qp) - mu; }
  Momentum effective_momentum() const { return (delta_B / k_F) * k; }
};

/// A Hermitian involution together with the energy it was normalized by.
struct NormalizedHamiltonian {
  ComplexMatrix matrix;
  double energy_scale;
};

struct DiracMatrices {
  ComplexMatrix beta;
  ComplexMatrix alpha1;
  ComplexMatrix alpha2;
  ComplexMatrix alpha3;

  /// p . alpha
  ComplexMatrix dot(const Momentum& p) const {
    return p.p1 * alpha1 + p.p2 * alpha2 + p.p3 * alpha3;
  }
};

/// Standard representation: beta = diag(1, 1, -1, -1), alpha_i with sigma_i
/// in the off-diagonal blocks.
inline const DiracMatrices& dirac_matrices() {
  static const DiracMatrices matrices = [] {
    const auto id = ComplexMatrix::identity(2);
    const auto flip = pauli::sigma1();
    return DiracMatrices{kron(pauli::sigma3(), id), kron(flip, pauli::sigma1()),
                         kron(flip, pauli::sigma2()), kron(flip, pauli::sigma3())};
  }();
  return matrices;
}

/// H_D = (m beta + p . alpha) / E.
inline NormalizedHamiltonian dirac_hamiltonian(const DiracParams& params) {
  const auto& d = dirac_matrices();
  const double e = params.energy();
  return {(params.mass() * d.beta + d.dot(params.momentum())) / e, e};
}

/// H_B = m(k) beta + p_eff . alpha, with m(k) = k^2 / (2 m_qp) - mu and
/// p_eff = k delta_B / k_F. Not normalized.
inline ComplexMatrix bogoliubov_hamiltonian(const BogoliubovParams& params) {
  params.validate();
  const auto& d = dirac_matrices();
  return params.mass_term() * d.beta + d.dot(params.effective_momentum());
}

/// The braid partner of H_D: (p^2 beta - m p . alpha) / (E p), normalized by
/// the energy scale p E / m.
inline NormalizedHamiltonian derived_hamiltonian(const DiracParams& params) {
  const auto& d = dirac_matrices();
  const double p = params.momentum_magnitude();
  const double e = params.energy();
  auto matrix = (p * p * d.beta - params.mass() * d.dot(params.momentum())) / (e * p);
  return {std::move(matrix), p * e / params.mass()};
}

struct BogoliubovMatch {
  double residual;         // ||E_scale * H - H_B||_F
  double energy_residual;  // |E_scale - sqrt(m(k)^2 + p_eff^2)|
  BogoliubovParams matched_params;
  bool matched;
};

/// Identifies E_scale * H with a Bogoliubov Hamiltonian at mu = 0, quasiparticle
/// mass m / 2 and effective momentum -p (k = p, delta_B / k_F = -1).
inline BogoliubovMatch bogoliubov_match(const DiracParams& params, Tolerance tol = {}) {
  BogoliubovParams matched{params.momentum(), params.mass() / 2.0, 0.0, -1.0, 1.0};
  const auto derived = derived_hamiltonian(params);
  const auto hb = bogoliubov_hamiltonian(matched);
  const double residual = frobenius_distance(derived.energy_scale * derived.matrix, hb);
  const double qp_energy =
      std::hypot(matched.mass_term(), matched.effective_momentum().magnitude());
  const double energy_residual = std::abs(derived.energy_scale - qp_energy);
  return {residual, energy_residual, matched,
          residual < tol.abs_tol && energy_residual < tol.abs_tol};
}

}  // namespace braidham
