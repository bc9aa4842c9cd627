#pragma once

// Field equations checked on plane-wave amplitudes: Klein-Gordon relations of
// the scalar sector, Proca relations of the vector sector, and the map between
// the scalar reading and the Proca reading of the (1+1) irrep spinor.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dkp/check.hpp"
#include "dkp/errors.hpp"
#include "dkp/momentum.hpp"
#include "dkp/projectors.hpp"
#include "dkp/representation.hpp"

namespace dkp {

namespace detail {

inline void require_on_shell(const Momentum& p) {
  if (!p.on_shell())
    throw PreconditionError("off-shell momentum: p^2 = " + to_string(p.square()) + " but m^2 = " +
                            to_string(Rational(p.mass() * p.mass())));
}

inline void apply_all(CheckReport& r, const std::vector<LabelledOperator>& ops, const PlaneWaveSolution& sol) {
  for (std::size_t k = 0; k < sol.amplitude_basis.size(); ++k)
    for (const auto& op : ops) r.expect_zero(op.label + " [u" + std::to_string(k) + "]", op.op * sol.amplitude_basis[k]);
}

}  // namespace detail

/// p_mu (P^mu u) = m (P u), P_mu u = (p_mu/m) P u and (m^2 - p^2) P u = 0 for
/// every amplitude. Amplitudes with P u = 0 are reported as degenerate.
inline CheckReport kg_relations_check(const Representation& rep, const ProjectorSet& ps, const PlaneWaveSolution& sol) {
  detail::require_on_shell(sol.momentum);
  if (rep.D() != sol.momentum.D()) throw ShapeError("kg_relations_check: D mismatch between representation and momentum");
  CheckReport r{"klein_gordon_relations"};
  r.notes.push_back(kPlaneWaveConvention);
  detail::apply_all(r, scalar_sector_operators(ps, sol.momentum), sol);
  std::size_t degenerate = 0;
  for (const auto& u : sol.amplitude_basis)
    if ((ps.P * u).is_zero()) ++degenerate;
  if (degenerate) r.notes.push_back(std::to_string(degenerate) + " degenerate amplitude(s) with P u = 0");
  if (r.passed() && degenerate == sol.amplitude_basis.size()) r.status = CheckStatus::vacuous;
  return r;
}

/// p_nu (R^{mu nu} u) = m (R^mu u), m R^{mu nu} u = -(p^mu R^nu u - p^nu R^mu u),
/// p_mu (R^mu u) = 0 and (m^2 - p^2) R^mu u = 0. In (1+1) the beta^1-rewritten
/// system and its operator-level equivalence with the scalar sector are
/// checked as well.
inline CheckReport proca_relations_check(const Representation& rep, const ProjectorSet& ps,
                                         const PlaneWaveSolution& sol) {
  detail::require_on_shell(sol.momentum);
  if (rep.D() != 2 && rep.D() != 4)
    throw PreconditionError("proca_relations_check supports D=2 and D=4, got D=" + std::to_string(rep.D()));
  if (rep.D() != sol.momentum.D()) throw ShapeError("proca_relations_check: D mismatch between representation and momentum");
  CheckReport r{"proca_relations"};
  r.notes.push_back(kPlaneWaveConvention);
  r.notes.push_back("U^{mu nu} is read as acting on psi: U^{mu nu} = d^mu(R^nu psi) - d^nu(R^mu psi)");
  detail::apply_all(r, vector_sector_operators(ps, sol.momentum), sol);
  if (rep.D() == 2) {
    detail::apply_all(r, reduced_1p1_operators(ps, rep, sol.momentum), sol);
    auto reduction = verify_1p1_reduction(ps, rep, sol.momentum);
    r.identities_checked += reduction.identities_checked;
    for (auto& f : reduction.failures) r.failures.push_back(std::move(f));
    if (!reduction.passed()) r.status = CheckStatus::fail;
  }
  std::size_t degenerate = 0;
  for (const auto& u : sol.amplitude_basis) {
    bool zero = true;
    for (const auto& rmu : ps.R_up) zero = zero && (rmu * u).is_zero();
    if (zero) ++degenerate;
  }
  if (degenerate) r.notes.push_back(std::to_string(degenerate) + " degenerate amplitude(s) with R^mu u = 0");
  if (r.passed() && degenerate == sol.amplitude_basis.size()) r.status = CheckStatus::vacuous;
  return r;
}

/// Scalar and Proca readings of the on-shell amplitude of the builtin (1+1)
/// irrep, in plane-wave form (d^mu -> -i p^mu).
struct FieldMapReport {
  CheckReport check;
  GaussianRational phi;
  GaussianRational d_up0_phi, d_up1_phi;  // d^0 phi, d^1 phi
  GaussianRational F01, A0, A1;
};

/// Reads u once as (m phi, d^1 phi, d^0 phi)/m and once as (F^{01}/m, -A^0, -A^1),
/// then checks F^{01}/m = phi, -A^0 = d^1 phi / m, -A^1 = d^0 phi / m, the
/// Lorenz condition p_mu A^mu = 0, F^{01} = d^0 A^1 - d^1 A^0, and that
/// mapping the fields back reproduces u.
inline FieldMapReport field_map_check(const Momentum& p) {
  if (p.D() != 2) throw PreconditionError("field_map_check requires a (1+1) momentum, got D=" + std::to_string(p.D()));
  detail::require_on_shell(p);
  const auto sol = solution_space(builtin_irrep_1p1(), p);
  if (sol.amplitude_basis.size() != 1)
    throw std::logic_error("field_map_check: expected a one-dimensional on-shell solution space, got " +
                           std::to_string(sol.amplitude_basis.size()));
  const Matrix& u = sol.amplitude_basis.front();
  const GaussianRational i = GaussianRational::i();
  const GaussianRational m(p.mass());
  auto d_up = [&](std::size_t mu, const GaussianRational& f) { return -i * GaussianRational(p.upper(mu)) * f; };

  FieldMapReport out;
  out.check.name = "field_map";
  out.check.notes.push_back(kPlaneWaveConvention);
  // scalar reading
  out.phi = u(0, 0);
  out.d_up1_phi = m * u(1, 0);
  out.d_up0_phi = m * u(2, 0);
  // Proca reading
  out.F01 = m * u(0, 0);
  out.A0 = -u(1, 0);
  out.A1 = -u(2, 0);

  auto scalar = [](const GaussianRational& z) { return Matrix{{z}}; };
  CheckReport& r = out.check;
  r.expect_equal("d^1 phi from the amplitude = -i p^1 phi", scalar(out.d_up1_phi), scalar(d_up(1, out.phi)));
  r.expect_equal("d^0 phi from the amplitude = -i p^0 phi", scalar(out.d_up0_phi), scalar(d_up(0, out.phi)));
  r.expect_equal("F^01 / m = phi", scalar(out.F01 / m), scalar(out.phi));
  r.expect_equal("-A^0 = (1/m) d^1 phi", scalar(-out.A0), scalar(d_up(1, out.phi) / m));
  r.expect_equal("-A^1 = (1/m) d^0 phi", scalar(-out.A1), scalar(d_up(0, out.phi) / m));
  r.expect_zero("p_mu A^mu = 0", scalar(GaussianRational(p.lower(0)) * out.A0 + GaussianRational(p.lower(1)) * out.A1));
  r.expect_equal("F^01 = d^0 A^1 - d^1 A^0", scalar(out.F01), scalar(d_up(0, out.A1) - d_up(1, out.A0)));

  // phi -> (F^01, A^0, A^1) -> Proca spinor must reproduce u
  const GaussianRational F01 = m * out.phi;
  const GaussianRational A0 = -d_up(1, out.phi) / m, A1 = -d_up(0, out.phi) / m;
  r.expect_equal("mapped Proca spinor == u", Matrix{{F01 / m}, {-A0}, {-A1}}, u);
  if (r.passed() && p.upper(1) == 0) r.notes.push_back("rest frame: A^0 = 0 and phi is carried by F^01 alone");
  return out;
}

}  // namespace dkp
