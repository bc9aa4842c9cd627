#pragma once

// Plane-wave substitution psi = u exp(-i p.x), so d_mu -> -i p_mu, and the
// resulting algebraic DKP symbol and its kernel.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dkp/errors.hpp"
#include "dkp/linalg.hpp"
#include "dkp/representation.hpp"

namespace dkp {

inline constexpr const char* kPlaneWaveConvention = "psi ~ u exp(-i p.x), d_mu -> -i p_mu";

/// Energy-momentum p^mu (given with upper indices: energy first) and mass m.
class Momentum {
 public:
  Momentum(std::vector<Rational> components, Rational mass)
      : components_(std::move(components)), mass_(std::move(mass)), metric_(Metric::minkowski(components_.size())) {
    if (sgn(mass_) <= 0) throw PreconditionError("mass must be positive, got " + to_string(mass_));
  }

  std::size_t D() const { return components_.size(); }
  const Rational& mass() const { return mass_; }
  const std::vector<Rational>& components() const { return components_; }
  /// p^mu
  const Rational& upper(std::size_t mu) const { return components_.at(mu); }
  /// p_mu = g_{mu mu} p^mu
  Rational lower(std::size_t mu) const { return metric_.diag(mu) == 1 ? components_.at(mu) : Rational(-components_.at(mu)); }
  /// p_mu p^mu
  Rational square() const {
    Rational s = 0;
    for (std::size_t mu = 0; mu < D(); ++mu) s += upper(mu) * lower(mu);
    return s;
  }
  bool on_shell() const { return square() == mass_ * mass_; }

 private:
  std::vector<Rational> components_;
  Rational mass_;
  Metric metric_;
};

/// beta^mu p_mu - m I
inline Matrix dkp_symbol(const Representation& rep, const Momentum& p) {
  if (rep.D() != p.D())
    throw ShapeError("dkp_symbol: representation has D=" + std::to_string(rep.D()) + " but momentum has " +
                     std::to_string(p.D()) + " components");
  Matrix symbol = GaussianRational(Rational(-p.mass())) * rep.identity();
  for (std::size_t mu = 0; mu < rep.D(); ++mu)
    if (!is_zero(p.lower(mu))) symbol += GaussianRational(p.lower(mu)) * rep.upper(mu);
  return symbol;
}

struct PlaneWaveSolution {
  Momentum momentum;
  std::vector<Matrix> amplitude_basis;  // columns u with (beta.p - m) u = 0
};

/// Kernel of the DKP symbol. Off-shell momenta are allowed.
inline PlaneWaveSolution solution_space(const Representation& rep, const Momentum& p) {
  return {p, null_space(dkp_symbol(rep, p))};
}

}  // namespace dkp
