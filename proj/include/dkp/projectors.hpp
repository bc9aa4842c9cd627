#pragma once

// Fujiwara projectors (scalar sector P, P^mu; vector sector R^mu, R^{mu nu}),
// Lorentz generators S_{mu nu}, and the identities they satisfy.
//
// Lorentz covariance is checked at generator level: with U = 1 + w S / 2,
// P(U psi) = P psi for every w is the statement P S_{mu nu} = 0.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dkp/check.hpp"
#include "dkp/errors.hpp"
#include "dkp/momentum.hpp"
#include "dkp/representation.hpp"

namespace dkp {

namespace detail {

inline std::string idx(std::size_t mu) { return std::to_string(mu); }
inline std::string idx(std::size_t mu, std::size_t nu) { return std::to_string(mu) + std::to_string(nu); }

inline GaussianRational q(const Rational& x) { return GaussianRational(x); }

}  // namespace detail

struct ProjectorSet {
  Metric metric;
  Matrix P;
  std::vector<Matrix> P_up;               // P^mu = P beta^mu
  std::vector<Matrix> R_up;               // R^mu
  std::vector<std::vector<Matrix>> R_up2;  // R^{mu nu} = R^mu beta^nu
  std::vector<std::vector<Matrix>> S;      // S_{mu nu} = [beta_mu, beta_nu]

  std::size_t D() const { return metric.dimension(); }
  /// P_mu = g_{mu mu} P^mu
  Matrix P_low(std::size_t mu) const { return metric.diag(mu) == 1 ? P_up.at(mu) : -P_up.at(mu); }
  Matrix R_low(std::size_t mu) const { return metric.diag(mu) == 1 ? R_up.at(mu) : -R_up.at(mu); }
};

/// P = -(beta_0)^2 ... (beta_{D-1})^2,
/// R^mu = (beta_1)^2 ... (beta_{D-1})^2 [beta^mu beta^0 - g^{mu 0}].
/// Throws when the input is not DKP or the resulting P is not idempotent
/// (no sign formula is extrapolated beyond the cases where P^2 = P).
inline ProjectorSet build_projectors(const Representation& rep) {
  const auto algebra = verify_dkp(rep);
  if (!algebra.passed)
    throw PreconditionError("build_projectors: input violates the DKP algebra (" +
                            std::to_string(algebra.violations.size()) + " violating triples)");
  const std::size_t d = rep.D();
  const Matrix id = rep.identity();

  Matrix spatial_squares = id;
  for (std::size_t k = 1; k < d; ++k) spatial_squares = spatial_squares * rep.lower(k) * rep.lower(k);

  ProjectorSet ps{rep.metric(), -(rep.lower(0) * rep.lower(0) * spatial_squares), {}, {}, {}, {}};
  if (ps.P * ps.P != ps.P)
    throw PreconditionError("build_projectors: P = -prod (beta_k)^2 is not idempotent for this representation (D=" +
                            std::to_string(d) + ")");

  for (std::size_t mu = 0; mu < d; ++mu) {
    ps.P_up.push_back(ps.P * rep.upper(mu));
    Matrix bracket = rep.upper(mu) * rep.upper(0);
    if (int g = rep.metric()(mu, 0)) bracket -= GaussianRational(long{g}) * id;
    ps.R_up.push_back(spatial_squares * bracket);
  }
  ps.R_up2.assign(d, {});
  ps.S.assign(d, {});
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = 0; nu < d; ++nu) {
      ps.R_up2[mu].push_back(ps.R_up[mu] * rep.upper(nu));
      ps.S[mu].push_back(commutator(rep.lower(mu), rep.lower(nu)));
    }
  return ps;
}

/// P S_{mu nu} = 0 for all mu < nu.
inline CheckReport verify_scalar_covariance(const ProjectorSet& ps) {
  CheckReport r{"scalar_covariance"};
  for (std::size_t mu = 0; mu < ps.D(); ++mu)
    for (std::size_t nu = mu + 1; nu < ps.D(); ++nu)
      r.expect_zero("P S_" + detail::idx(mu, nu), ps.P * ps.S[mu][nu]);
  if (r.passed() && ps.P.is_zero()) r.status = CheckStatus::vacuous;
  return r;
}

enum class VectorFamily { P_up, R_up };

inline const char* to_string(VectorFamily f) { return f == VectorFamily::P_up ? "P^mu" : "R^mu"; }

namespace detail {

/// Residuals of V^rho S_{mu nu} = sign (delta^rho_mu V_nu - delta^rho_nu V_mu).
inline void vector_law(CheckReport& r, const ProjectorSet& ps, VectorFamily family, int sign) {
  const auto& up = family == VectorFamily::P_up ? ps.P_up : ps.R_up;
  auto low = [&](std::size_t mu) { return family == VectorFamily::P_up ? ps.P_low(mu) : ps.R_low(mu); };
  const std::size_t d = ps.D();
  const std::size_t n = ps.P.rows();
  for (std::size_t rho = 0; rho < d; ++rho)
    for (std::size_t mu = 0; mu < d; ++mu)
      for (std::size_t nu = mu + 1; nu < d; ++nu) {
        Matrix expected(n, n);
        if (rho == mu) expected += low(nu);
        if (rho == nu) expected -= low(mu);
        r.expect_equal(std::string(to_string(family)) + " law rho=" + idx(rho) + " S_" + idx(mu, nu),
                       up[rho] * ps.S[mu][nu], GaussianRational(long{sign}) * expected);
      }
}

inline int calibrate_vector_law_sign() {
  const ProjectorSet ps = build_projectors(builtin_irrep_1p1());
  for (int sign : {1, -1}) {
    CheckReport r;
    vector_law(r, ps, VectorFamily::P_up, sign);
    if (r.passed()) return sign;
  }
  throw std::logic_error("vector covariance law holds with neither sign on the builtin irrep");
}

}  // namespace detail

/// Overall sign s in V^rho S_{mu nu} = s (delta^rho_mu V_nu - delta^rho_nu V_mu),
/// fixed once by exact computation on the builtin (1+1) irrep with V = P^mu.
inline int vector_law_sign() {
  static const int sign = detail::calibrate_vector_law_sign();
  return sign;
}

struct VectorCovarianceReport {
  CheckReport law;
  int sign_convention = 0;
  /// Literal generator form of P^mu(U psi) = P^mu psi, i.e. V^rho S_{mu nu} = 0.
  bool literal_invariance = false;
};

inline VectorCovarianceReport verify_vector_covariance(const ProjectorSet& ps, VectorFamily family) {
  VectorCovarianceReport out;
  out.sign_convention = vector_law_sign();
  out.law.name = std::string("vector_covariance ") + to_string(family);
  detail::vector_law(out.law, ps, family, out.sign_convention);
  out.law.notes.push_back("law: V^rho S_{mu nu} = " + std::string(out.sign_convention > 0 ? "+" : "-") +
                          "(delta^rho_mu V_nu - delta^rho_nu V_mu)");

  const auto& up = family == VectorFamily::P_up ? ps.P_up : ps.R_up;
  out.literal_invariance = true;
  for (std::size_t rho = 0; rho < ps.D(); ++rho)
    for (std::size_t mu = 0; mu < ps.D(); ++mu)
      for (std::size_t nu = mu + 1; nu < ps.D(); ++nu)
        if (!(up[rho] * ps.S[mu][nu]).is_zero()) out.literal_invariance = false;
  out.law.notes.push_back(std::string("literal invariance V^rho S_{mu nu} = 0: ") +
                          (out.literal_invariance ? "holds" : "does not hold"));

  bool family_zero = true;
  for (const auto& v : up) family_zero = family_zero && v.is_zero();
  if (out.law.passed() && family_zero) out.law.status = CheckStatus::vacuous;
  return out;
}

/// (1+1) only: R^{01} S_{01} = 0, R^{10} = -R^{01}, R^{00} = R^{11} = 0.
inline CheckReport verify_r01_scalar(const ProjectorSet& ps) {
  if (ps.D() != 2) throw PreconditionError("verify_r01_scalar requires D=2, got D=" + std::to_string(ps.D()));
  CheckReport r{"r01_scalar"};
  r.expect_zero("R^01 S_01", ps.R_up2[0][1] * ps.S[0][1]);
  r.expect_zero("R^10 + R^01", ps.R_up2[1][0] + ps.R_up2[0][1]);
  r.expect_zero("R^00", ps.R_up2[0][0]);
  r.expect_zero("R^11", ps.R_up2[1][1]);
  if (r.passed() && ps.R_up2[0][1].is_zero()) r.status = CheckStatus::vacuous;
  return r;
}

/// (1+1) only: R^0 = -beta^1 P^1, R^1 = -beta^1 P^0, R^{01} = beta^1 P,
/// and -(beta^1)^2 P = P.
inline CheckReport verify_rels_1p1(const ProjectorSet& ps, const Representation& rep) {
  if (ps.D() != 2 || rep.D() != 2)
    throw PreconditionError("verify_rels_1p1 requires D=2, got D=" + std::to_string(rep.D()));
  CheckReport r{"rels_1p1"};
  const Matrix& b1 = rep.upper(1);
  r.expect_equal("R^0 = -beta^1 P^1", ps.R_up[0], -(b1 * ps.P_up[1]));
  r.expect_equal("R^1 = -beta^1 P^0", ps.R_up[1], -(b1 * ps.P_up[0]));
  r.expect_equal("R^01 = beta^1 P", ps.R_up2[0][1], b1 * ps.P);
  r.expect_equal("-(beta^1)^2 P = P", -(b1 * b1 * ps.P), ps.P);
  return r;
}

struct OrthogonalityReport {
  bool all_vanish = true;
  std::size_t products_checked = 0;
  std::vector<std::string> nonzero_products;
};

/// Every product of one operator from {P, P^mu} with one from {R^mu, R^{mu nu}},
/// in both orders.
inline OrthogonalityReport verify_orthogonality(const ProjectorSet& ps) {
  std::vector<std::pair<std::string, const Matrix*>> scalar{{"P", &ps.P}}, vector;
  for (std::size_t mu = 0; mu < ps.D(); ++mu) scalar.emplace_back("P^" + detail::idx(mu), &ps.P_up[mu]);
  for (std::size_t mu = 0; mu < ps.D(); ++mu) vector.emplace_back("R^" + detail::idx(mu), &ps.R_up[mu]);
  for (std::size_t mu = 0; mu < ps.D(); ++mu)
    for (std::size_t nu = 0; nu < ps.D(); ++nu) vector.emplace_back("R^" + detail::idx(mu, nu), &ps.R_up2[mu][nu]);

  OrthogonalityReport out;
  for (const auto& [sname, s] : scalar)
    for (const auto& [vname, v] : vector) {
      out.products_checked += 2;
      if (!(*s * *v).is_zero()) out.nonzero_products.push_back(sname + " " + vname);
      if (!(*v * *s).is_zero()) out.nonzero_products.push_back(vname + " " + sname);
    }
  out.all_vanish = out.nonzero_products.empty();
  return out;
}

struct LabelledOperator {
  std::string label;
  Matrix op;
};

/// Scalar-sector equations after d_mu -> -i p_mu, as operators whose kernel
/// must contain every plane-wave amplitude:
///   d_mu(P^mu psi) + i m P psi,   P_mu psi - (i/m) d_mu(P psi),   (box + m^2) P psi.
inline std::vector<LabelledOperator> scalar_sector_operators(const ProjectorSet& ps, const Momentum& p) {
  const GaussianRational i = GaussianRational::i();
  const Rational& m = p.mass();
  std::vector<LabelledOperator> ops;
  Matrix div = i * detail::q(m) * ps.P;
  for (std::size_t mu = 0; mu < ps.D(); ++mu) div -= i * detail::q(p.lower(mu)) * ps.P_up[mu];
  ops.push_back({"d_mu(P^mu psi) = -i m P psi", std::move(div)});
  for (std::size_t mu = 0; mu < ps.D(); ++mu)
    ops.push_back({"P_" + detail::idx(mu) + " psi = (i/m) d_" + detail::idx(mu) + "(P psi)",
                   ps.P_low(mu) - detail::q(Rational(p.lower(mu) / m)) * ps.P});
  ops.push_back({"(box + m^2) P psi = 0", detail::q(Rational(m * m - p.square())) * ps.P});
  return ops;
}

/// Vector-sector equations after d_mu -> -i p_mu:
///   d_nu(R^{mu nu} psi) + i m R^mu psi,
///   R^{mu nu} psi + (i/m)[d^mu(R^nu psi) - d^nu(R^mu psi)],
///   d_mu(R^mu psi),   (box + m^2) R^mu psi.
inline std::vector<LabelledOperator> vector_sector_operators(const ProjectorSet& ps, const Momentum& p) {
  const GaussianRational i = GaussianRational::i();
  const Rational& m = p.mass();
  const std::size_t d = ps.D();
  std::vector<LabelledOperator> ops;
  for (std::size_t mu = 0; mu < d; ++mu) {
    Matrix op = i * detail::q(m) * ps.R_up[mu];
    for (std::size_t nu = 0; nu < d; ++nu) op -= i * detail::q(p.lower(nu)) * ps.R_up2[mu][nu];
    ops.push_back({"d_nu(R^" + detail::idx(mu) + "nu psi) = -i m R^" + detail::idx(mu) + " psi", std::move(op)});
  }
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = 0; nu < d; ++nu) {
      // (i/m)(-i p^mu) = p^mu / m
      Matrix op = ps.R_up2[mu][nu] + detail::q(Rational(p.upper(mu) / m)) * ps.R_up[nu] -
                  detail::q(Rational(p.upper(nu) / m)) * ps.R_up[mu];
      ops.push_back({"R^" + detail::idx(mu, nu) + " psi = -(i/m) U^" + detail::idx(mu, nu), std::move(op)});
    }
  Matrix divergence(ps.P.rows(), ps.P.cols());
  for (std::size_t mu = 0; mu < d; ++mu) divergence -= i * detail::q(p.lower(mu)) * ps.R_up[mu];
  ops.push_back({"d_mu(R^mu psi) = 0", std::move(divergence)});
  for (std::size_t mu = 0; mu < d; ++mu)
    ops.push_back({"(box + m^2) R^" + detail::idx(mu) + " psi = 0", detail::q(Rational(m * m - p.square())) * ps.R_up[mu]});
  return ops;
}

/// The (1+1) vector-sector system rewritten with beta^1 and P:
///   beta^1 d_1(P psi) - beta^1 (i m) P^1 psi,
///   beta^1 d_0(P psi) + beta^1 (i m) P^0 psi,
///   beta^1 P psi - beta^1 (i/m)[d^0(P^0 psi) - d^1(P^1 psi)].
inline std::vector<LabelledOperator> reduced_1p1_operators(const ProjectorSet& ps, const Representation& rep,
                                                           const Momentum& p) {
  if (rep.D() != 2) throw PreconditionError("reduced_1p1_operators requires D=2, got D=" + std::to_string(rep.D()));
  const GaussianRational i = GaussianRational::i();
  const Rational& m = p.mass();
  const Matrix& b1 = rep.upper(1);
  std::vector<LabelledOperator> ops;
  ops.push_back({"beta^1 d_1(P psi) = beta^1 (i m) P^1 psi",
                 b1 * (-i * detail::q(p.lower(1)) * ps.P - i * detail::q(m) * ps.P_up[1])});
  ops.push_back({"beta^1 d_0(P psi) = -beta^1 (i m) P^0 psi",
                 b1 * (-i * detail::q(p.lower(0)) * ps.P + i * detail::q(m) * ps.P_up[0])});
  ops.push_back({"beta^1 P psi = beta^1 (i/m)[d^0(P^0 psi) - d^1(P^1 psi)]",
                 b1 * (ps.P - detail::q(Rational(p.upper(0) / m)) * ps.P_up[0] +
                       detail::q(Rational(p.upper(1) / m)) * ps.P_up[1])});
  return ops;
}

/// Operator-level equivalence of the (1+1) vector-sector system with the
/// scalar-sector one, valid for any momentum:
///   * the generic vector-sector equations reduce to the beta^1 system,
///   * each beta^1 equation is beta^1 times a scalar-sector equation, and
///     multiplying it by beta^1 again returns that scalar-sector equation
///     (via -(beta^1)^2 P = P).
inline CheckReport verify_1p1_reduction(const ProjectorSet& ps, const Representation& rep, const Momentum& p) {
  if (rep.D() != 2) throw PreconditionError("verify_1p1_reduction requires D=2, got D=" + std::to_string(rep.D()));
  CheckReport r{"reduction_1p1"};
  const GaussianRational i = GaussianRational::i();
  const GaussianRational m = detail::q(p.mass());
  const Matrix& b1 = rep.upper(1);
  const auto scalar = scalar_sector_operators(ps, p);  // [div, der_0, der_1, kg]
  const auto vector = vector_sector_operators(ps, p);  // [tensor-div_0, tensor-div_1, strength_00, 01, 10, 11, ...]
  const auto reduced = reduced_1p1_operators(ps, rep, p);

  r.expect_equal("vector eq mu=0 == beta^1 system eq 1", vector[0].op, reduced[0].op);
  r.expect_equal("vector eq mu=1 == -(beta^1 system eq 2)", vector[1].op, -reduced[1].op);
  r.expect_equal("strength eq 01 == beta^1 system eq 3", vector[3].op, reduced[2].op);

  const std::vector<std::pair<const Matrix*, GaussianRational>> partner{
      {&scalar[2].op, i * m},        // P_1 relation
      {&scalar[1].op, i * m},        // P_0 relation
      {&scalar[0].op, -i / m},       // divergence relation
  };
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& [q_op, c] = partner[k];
    r.expect_equal("beta^1 system eq " + std::to_string(k + 1) + " == c beta^1 (scalar eq)", reduced[k].op,
                   c * (b1 * *q_op));
    r.expect_equal("beta^1 (beta^1 system eq " + std::to_string(k + 1) + ") == -c (scalar eq)", b1 * reduced[k].op,
                   -c * *q_op);
  }
  return r;
}

/// Applies the sector equations to every plane-wave amplitude of rep at p.
inline CheckReport verify_dkp_sector_equations(const ProjectorSet& ps, const Representation& rep, const Momentum& p) {
  if (!verify_dkp(rep).passed) throw PreconditionError("verify_dkp_sector_equations: input is not a DKP representation");
  if (!p.on_shell())
    throw PreconditionError("off-shell momentum: p^2 = " + to_string(p.square()) + " but m^2 = " +
                            to_string(Rational(p.mass() * p.mass())));
  CheckReport r{"sector_equations"};
  r.notes.push_back(kPlaneWaveConvention);
  const auto sol = solution_space(rep, p);
  auto ops = scalar_sector_operators(ps, p);
  for (auto& op : vector_sector_operators(ps, p)) ops.push_back(std::move(op));
  if (rep.D() == 2)
    for (auto& op : reduced_1p1_operators(ps, rep, p)) ops.push_back(std::move(op));
  for (std::size_t k = 0; k < sol.amplitude_basis.size(); ++k)
    for (const auto& op : ops) r.expect_zero(op.label + " [u" + std::to_string(k) + "]", op.op * sol.amplitude_basis[k]);
  if (rep.D() == 2) {
    auto reduction = verify_1p1_reduction(ps, rep, p);
    r.identities_checked += reduction.identities_checked;
    for (auto& f : reduction.failures) r.failures.push_back(std::move(f));
    if (!reduction.passed()) r.status = CheckStatus::fail;
  }
  r.notes.push_back("solution space dimension: " + std::to_string(sol.amplitude_basis.size()));
  if (r.passed() && sol.amplitude_basis.empty()) r.status = CheckStatus::vacuous;
  return r;
}

}  // namespace dkp
