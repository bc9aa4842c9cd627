#pragma once

// Clifford (gamma) and DKP (beta) matrix representations: metric, builders
// for every representation the toolkit ships, and the algebra verifiers.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dkp/errors.hpp"
#include "dkp/linalg.hpp"
#include "dkp/matrix.hpp"

namespace dkp {

/// Diagonal Minkowski metric with signature (+,-,...,-).
class Metric {
 public:
  explicit Metric(std::vector<int> signature) : signature_(std::move(signature)) {
    if (signature_.size() < 2) throw PreconditionError("metric needs at least two space-time dimensions");
    if (signature_.front() != 1) throw PreconditionError("metric signature must start with +1");
    for (std::size_t k = 1; k < signature_.size(); ++k)
      if (signature_[k] != -1)
        throw PreconditionError("only the (+,-,...,-) signature is supported; entry " + std::to_string(k) + " is " +
                                std::to_string(signature_[k]));
  }

  static Metric minkowski(std::size_t dimension) {
    if (dimension < 2) throw PreconditionError("space-time dimension must be at least 2, got " + std::to_string(dimension));
    std::vector<int> s(dimension, -1);
    s[0] = 1;
    return Metric(std::move(s));
  }

  std::size_t dimension() const { return signature_.size(); }
  const std::vector<int>& signature() const { return signature_; }
  /// g^{mu mu} (equal to g_{mu mu} for a diagonal +-1 metric)
  int diag(std::size_t mu) const { return signature_.at(mu); }
  /// g^{mu nu}
  int operator()(std::size_t mu, std::size_t nu) const { return mu == nu ? signature_.at(mu) : 0; }

  friend bool operator==(const Metric&, const Metric&) = default;

 private:
  std::vector<int> signature_;
};

/// A candidate representation: D square matrices beta^0..beta^{D-1} of a
/// common size. Nothing about the algebra they satisfy is assumed.
class Representation {
 public:
  Representation(Metric metric, std::vector<Matrix> betas) : metric_(std::move(metric)), betas_(std::move(betas)) {
    if (betas_.size() != metric_.dimension())
      throw ShapeError("representation has " + std::to_string(betas_.size()) + " matrices but the metric has D=" +
                       std::to_string(metric_.dimension()));
    dim_ = betas_.front().rows();
    for (std::size_t mu = 0; mu < betas_.size(); ++mu)
      if (!betas_[mu].is_square() || betas_[mu].rows() != dim_ || dim_ == 0)
        throw ShapeError("beta^" + std::to_string(mu) + " has shape " + betas_[mu].shape_string() + ", expected " +
                         std::to_string(dim_) + "x" + std::to_string(dim_));
  }

  const Metric& metric() const { return metric_; }
  std::size_t D() const { return metric_.dimension(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& betas() const { return betas_; }
  const Matrix& upper(std::size_t mu) const { return betas_.at(mu); }
  /// beta_mu = g_{mu mu} beta^mu
  Matrix lower(std::size_t mu) const { return metric_.diag(mu) == 1 ? betas_.at(mu) : -betas_.at(mu); }
  Matrix identity() const { return Matrix::identity(dim_); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  Metric metric_;
  std::size_t dim_ = 0;
  std::vector<Matrix> betas_;
};

struct Violation {
  std::vector<std::size_t> indices;  // (mu,nu) for Clifford, (mu,nu,rho) for DKP
  Matrix residual;                   // LHS - RHS of the defining relation
};

struct AlgebraReport {
  bool passed = true;
  std::size_t relations_checked = 0;
  std::vector<Violation> violations;
};

/// gamma^mu gamma^nu + gamma^nu gamma^mu - 2 g^{mu nu} I = 0 for mu <= nu.
inline AlgebraReport verify_clifford(const Representation& rep) {
  AlgebraReport report;
  const Matrix id = rep.identity();
  for (std::size_t mu = 0; mu < rep.D(); ++mu)
    for (std::size_t nu = mu; nu < rep.D(); ++nu) {
      Matrix residual = anticommutator(rep.upper(mu), rep.upper(nu)) - GaussianRational(2L * rep.metric()(mu, nu)) * id;
      ++report.relations_checked;
      if (!residual.is_zero()) report.violations.push_back({{mu, nu}, std::move(residual)});
    }
  report.passed = report.violations.empty();
  return report;
}

/// beta^mu beta^nu beta^rho + beta^rho beta^nu beta^mu - g^{mu nu} beta^rho
/// - g^{rho nu} beta^mu = 0 over all D^3 ordered triples.
inline AlgebraReport verify_dkp(const Representation& rep) {
  AlgebraReport report;
  const std::size_t d = rep.D();
  std::vector<Matrix> pair(d * d);
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = 0; nu < d; ++nu) pair[mu * d + nu] = rep.upper(mu) * rep.upper(nu);
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = 0; nu < d; ++nu)
      for (std::size_t rho = 0; rho < d; ++rho) {
        Matrix residual = pair[mu * d + nu] * rep.upper(rho) + pair[rho * d + nu] * rep.upper(mu);
        if (int g = rep.metric()(mu, nu)) residual -= GaussianRational(long{g}) * rep.upper(rho);
        if (int g = rep.metric()(rho, nu)) residual -= GaussianRational(long{g}) * rep.upper(mu);
        ++report.relations_checked;
        if (!residual.is_zero()) report.violations.push_back({{mu, nu, rho}, std::move(residual)});
      }
  report.passed = report.violations.empty();
  return report;
}

enum class GammaBasis { dirac2, dirac4 };

/// dirac2: gamma^0 = sigma_x, gamma^1 = i sigma_y. dirac4: standard Dirac
/// basis, gamma^0 = diag(I,-I), gamma^k = [[0, sigma_k], [-sigma_k, 0]].
inline Representation build_gamma(GammaBasis basis) {
  const GaussianRational i = GaussianRational::i();
  if (basis == GammaBasis::dirac2) {
    return Representation(Metric::minkowski(2), {Matrix{{0, 1}, {1, 0}}, Matrix{{0, 1}, {-1, 0}}});
  }
  const Matrix id2 = Matrix::identity(2);
  const std::vector<Matrix> sigma{Matrix{{0, 1}, {1, 0}}, Matrix{{0, -i}, {i, 0}}, Matrix{{1, 0}, {0, -1}}};
  std::vector<Matrix> gammas{kron(Matrix{{1, 0}, {0, -1}}, id2)};
  for (const auto& s : sigma) gammas.push_back(kron(Matrix{{0, 1}, {-1, 0}}, s));
  return Representation(Metric::minkowski(4), std::move(gammas));
}

/// beta^mu = c (gamma^mu (x) I + I (x) gamma^mu) with c = 1/2, or c = 1 when
/// include_half is false.
inline Representation build_kronecker_rep(const Representation& gammas, bool include_half) {
  const auto clifford = verify_clifford(gammas);
  if (!clifford.passed)
    throw PreconditionError("build_kronecker_rep: input fails the Clifford relation (" +
                            std::to_string(clifford.violations.size()) + " violations)");
  const Matrix id = gammas.identity();
  const GaussianRational c = include_half ? GaussianRational(make_rational(1, 2)) : GaussianRational(1);
  std::vector<Matrix> betas;
  for (const auto& g : gammas.betas()) betas.push_back(c * (kron(g, id) + kron(id, g)));
  return Representation(gammas.metric(), std::move(betas));
}

/// The 3x3 (1+1)-dimensional irrep, written out entry by entry.
inline Representation builtin_irrep_1p1() {
  const GaussianRational i = GaussianRational::i();
  return Representation(Metric::minkowski(2), {
                                                  Matrix{{0, 0, i}, {0, 0, 0}, {-i, 0, 0}},
                                                  Matrix{{0, i, 0}, {i, 0, 0}, {0, 0, 0}},
                                              });
}

/// All-zero matrices of the given size.
inline Representation trivial_rep(std::size_t spacetime_dim, std::size_t dim = 1) {
  return Representation(Metric::minkowski(spacetime_dim), std::vector<Matrix>(spacetime_dim, Matrix(dim, dim)));
}

/// First-order form of (box + m^2) phi = 0 with spinor
/// psi = (m phi, d^1 phi, ..., d^{D-1} phi, d^0 phi) / m.
inline Representation build_scalar_rep(std::size_t spacetime_dim) {
  if (spacetime_dim < 2) throw PreconditionError("build_scalar_rep: D must be >= 2, got " + std::to_string(spacetime_dim));
  const Metric metric = Metric::minkowski(spacetime_dim);
  const std::size_t n = spacetime_dim + 1;
  const GaussianRational i = GaussianRational::i();
  std::vector<Matrix> betas;
  for (std::size_t mu = 0; mu < spacetime_dim; ++mu) {
    const std::size_t slot = mu == 0 ? spacetime_dim : mu;  // position of d^mu phi
    Matrix b(n, n);
    b(0, slot) = i;
    b(slot, 0) = GaussianRational(-metric.diag(mu)) * i;
    betas.push_back(std::move(b));
  }
  return Representation(metric, std::move(betas));
}

/// First-order form of the Proca system with spinor
/// psi = (F^{mu nu}/m for mu < nu in lexicographic order, -A^0, ..., -A^{D-1}).
inline Representation build_vector_rep(std::size_t spacetime_dim) {
  if (spacetime_dim < 2) throw PreconditionError("build_vector_rep: D must be >= 2, got " + std::to_string(spacetime_dim));
  const std::size_t d = spacetime_dim;
  const Metric metric = Metric::minkowski(d);
  const GaussianRational i = GaussianRational::i();

  std::vector<std::vector<std::size_t>> tensor_slot(d, std::vector<std::size_t>(d, 0));
  std::size_t next = 0;
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = mu + 1; nu < d; ++nu) tensor_slot[mu][nu] = next++;
  const std::size_t potential_offset = next;
  const std::size_t n = next + d;

  std::vector<Matrix> betas(d, Matrix(n, n));
  for (std::size_t mu = 0; mu < d; ++mu)
    for (std::size_t nu = mu + 1; nu < d; ++nu) {
      const std::size_t f = tensor_slot[mu][nu];
      const std::size_t a_mu = potential_offset + mu, a_nu = potential_offset + nu;
      // F^{mu nu} = d^mu A^nu - d^nu A^mu
      betas[mu](f, a_nu) = GaussianRational(metric.diag(mu)) * i;
      betas[nu](f, a_mu) = GaussianRational(-metric.diag(nu)) * i;
      // d_rho F^{rho sigma} + m^2 A^sigma = 0
      betas[mu](a_nu, f) = -i;
      betas[nu](a_mu, f) = i;
    }
  return Representation(metric, std::move(betas));
}

/// Block-diagonal direct sum of representations over the same metric.
inline Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw PreconditionError("direct_sum: no summands");
  for (const auto& p : parts)
    if (p.metric() != parts.front().metric()) throw PreconditionError("direct_sum: metric mismatch");
  std::vector<Matrix> betas;
  for (std::size_t mu = 0; mu < parts.front().D(); ++mu) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.upper(mu));
    betas.push_back(block_diagonal(blocks));
  }
  return Representation(parts.front().metric(), std::move(betas));
}

/// beta^mu -> T^{-1} beta^mu T.
inline Representation conjugate(const Representation& rep, const Matrix& change_of_basis) {
  const auto inv = inverse(change_of_basis);
  if (!inv) throw PreconditionError("conjugate: change of basis is singular");
  std::vector<Matrix> betas;
  for (const auto& b : rep.betas()) betas.push_back(*inv * b * change_of_basis);
  return Representation(rep.metric(), std::move(betas));
}

}  // namespace dkp
