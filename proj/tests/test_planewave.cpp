#include <gtest/gtest.h>

#include "common.hpp"

using namespace dkp;
using t::c;
using t::mom;

namespace {

Momentum rational_mom(std::vector<Rational> p, Rational m) { return Momentum(std::move(p), std::move(m)); }

}  // namespace

TEST(Momentum, IndicesAndShell) {
  const auto p = mom({5, 4}, 3);
  EXPECT_EQ(p.upper(1), 4);
  EXPECT_EQ(p.lower(1), -4);
  EXPECT_EQ(p.square(), 9);
  EXPECT_TRUE(p.on_shell());
  EXPECT_FALSE(mom({1, 1}, 1).on_shell());
  EXPECT_THROW(mom({1, 0}, 0), PreconditionError);
  EXPECT_THROW(mom({1, 0}, -1), PreconditionError);
}

TEST(DkpSymbol, RestFrame) {
  const auto rep = builtin_irrep_1p1();
  EXPECT_EQ(dkp_symbol(rep, mom({1, 0}, 1)), t::irrep_b0() - Matrix::identity(3));
}

TEST(DkpSymbol, MovingFrameByHand) {
  // p_0 = 5, p_1 = -4: 5 b0 - 4 b1 - 3 I
  const Matrix expected{{c(-3), c(0, -4), c(0, 5)}, {c(0, -4), c(-3), c(0)}, {c(0, -5), c(0), c(-3)}};
  EXPECT_EQ(dkp_symbol(builtin_irrep_1p1(), mom({5, 4}, 3)), expected);
  EXPECT_EQ(expected, c(5) * t::irrep_b0() - c(4) * t::irrep_b1() - c(3) * Matrix::identity(3));
}

TEST(DkpSymbol, TrivialRep) {
  EXPECT_EQ(dkp_symbol(trivial_rep(2), mom({7, 2}, 5)), (Matrix{{c(-5)}}));
}

TEST(DkpSymbol, DimensionMismatch) { EXPECT_THROW(dkp_symbol(builtin_irrep_1p1(), mom({5, 4, 0, 0}, 3)), ShapeError); }

TEST(SolutionSpace, IrrepAmplitudePattern) {
  const auto sol = solution_space(builtin_irrep_1p1(), mom({5, 4}, 3));
  ASSERT_EQ(sol.amplitude_basis.size(), 1u);
  // (m phi, d^1 phi, d^0 phi)/m with d^mu -> -i p^mu
  const Matrix pattern{{c(3)}, {c(0, -4)}, {c(0, -5)}};
  EXPECT_TRUE(t::proportional(sol.amplitude_basis[0], pattern));
  EXPECT_EQ(sol.amplitude_basis[0], (Matrix{{GaussianRational(Rational(0), make_rational(3, 5))}, {make_rational(4, 5)}, {c(1)}}));
}

TEST(SolutionSpace, OffShellIsEmpty) {
  EXPECT_TRUE(solution_space(builtin_irrep_1p1(), mom({1, 1}, 1)).amplitude_basis.empty());
  EXPECT_NE(oracle::det(oracle::from(dkp_symbol(builtin_irrep_1p1(), mom({1, 1}, 1)))).re, 0);
}

TEST(SolutionSpace, ScalarRepFourDimensions) {
  EXPECT_EQ(solution_space(build_scalar_rep(4), mom({5, 4, 0, 0}, 3)).amplitude_basis.size(), 1u);
}

TEST(SolutionSpace, KernelNonzeroExactlyOnShell) {
  const std::vector<std::pair<std::vector<Rational>, Rational>> grid{
      {{5, 4}, 3}, {{13, 12}, 5}, {{1, 0}, 1}, {{7, 0}, 7}, {{make_rational(5, 2), make_rational(3, 2)}, 2},
      {{1, 1}, 1}, {{5, 4}, 2}, {{2, 0}, 3}, {{13, 5}, 5}, {{make_rational(1, 2), 0}, 1}};
  for (std::size_t d = 2; d <= 4; ++d)
    for (const auto& [p2, m] : grid) {
      std::vector<Rational> p = p2;
      p.resize(d, Rational(0));
      if (d == 3) std::swap(p[1], p[2]);
      const auto momentum = rational_mom(p, m);
      for (const auto& rep : {build_scalar_rep(d), d == 2 ? builtin_irrep_1p1() : build_vector_rep(d)}) {
        const auto k = solution_space(rep, momentum).amplitude_basis.size();
        EXPECT_EQ(k > 0, momentum.on_shell()) << "D=" << d << " dim=" << rep.dim();
        // rank of the symbol against the independent eliminator
        EXPECT_EQ(rep.dim() - k, oracle::rank(oracle::from(dkp_symbol(rep, momentum))));
      }
    }
}

TEST(SolutionSpace, ScalarRepsHaveOneAmplitude) {
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<Rational> p(d, Rational(0));
    p[0] = 13;
    p[d - 1] = 12;
    EXPECT_EQ(solution_space(build_scalar_rep(d), rational_mom(p, 5)).amplitude_basis.size(), 1u) << "D=" << d;
  }
}

TEST(SolutionSpace, VectorRepPolarizationCountIsFrozen) {
  // exact computation: three physical polarizations of a massive vector
  EXPECT_EQ(solution_space(build_vector_rep(4), mom({5, 4, 0, 0}, 3)).amplitude_basis.size(), 3u);
  EXPECT_EQ(solution_space(build_vector_rep(4), mom({7, 2, 2, 4}, 5)).amplitude_basis.size(), 3u);
  EXPECT_EQ(solution_space(build_vector_rep(4), mom({3, 0, 0, 0}, 3)).amplitude_basis.size(), 3u);
}

TEST(KgRelations, PassOnScalarReps) {
  for (const auto& [rep, p] : std::vector<std::pair<Representation, Momentum>>{
           {builtin_irrep_1p1(), mom({5, 4}, 3)}, {builtin_irrep_1p1(), mom({13, 12}, 5)},
           {build_scalar_rep(4), mom({5, 4, 0, 0}, 3)}, {build_scalar_rep(4), mom({7, 2, 2, 4}, 5)}}) {
    const auto ps = build_projectors(rep);
    const auto sol = solution_space(rep, p);
    const auto r = kg_relations_check(rep, ps, sol);
    EXPECT_EQ(r.status, CheckStatus::pass);
    for (const auto& u : sol.amplitude_basis) {
      Matrix div(rep.dim(), 1);
      for (std::size_t mu = 0; mu < rep.D(); ++mu) div += GaussianRational(p.lower(mu)) * (ps.P_up[mu] * u);
      EXPECT_EQ(div, GaussianRational(p.mass()) * (ps.P * u));
    }
  }
}

TEST(KgRelations, DegenerateAmplitudesAreReported) {
  // P = 0 on the 10-dim vector rep, so every amplitude is annihilated
  const auto rep = build_vector_rep(4);
  const auto r = kg_relations_check(rep, build_projectors(rep), solution_space(rep, mom({5, 4, 0, 0}, 3)));
  EXPECT_EQ(r.status, CheckStatus::vacuous);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes.back().find("degenerate"), std::string::npos);
}

TEST(KgRelations, RejectsOffShell) {
  const auto rep = builtin_irrep_1p1();
  EXPECT_THROW(kg_relations_check(rep, build_projectors(rep), solution_space(rep, mom({1, 1}, 1))), PreconditionError);
}

TEST(ProcaRelations, VectorRepEveryAmplitude) {
  const auto rep = build_vector_rep(4);
  const auto p = mom({5, 4, 0, 0}, 3);
  const auto ps = build_projectors(rep);
  const auto sol = solution_space(rep, p);
  const auto r = proca_relations_check(rep, ps, sol);
  EXPECT_EQ(r.status, CheckStatus::pass);
  for (const auto& u : sol.amplitude_basis) {
    Matrix div(rep.dim(), 1);
    for (std::size_t mu = 0; mu < 4; ++mu) div += GaussianRational(p.lower(mu)) * (ps.R_up[mu] * u);
    EXPECT_TRUE(div.is_zero());
    // strength tensor: m R^{mu nu} u = -(p^mu R^nu u - p^nu R^mu u)
    for (std::size_t mu = 0; mu < 4; ++mu)
      for (std::size_t nu = 0; nu < 4; ++nu)
        EXPECT_EQ(GaussianRational(p.mass()) * (ps.R_up2[mu][nu] * u),
                  -(GaussianRational(p.upper(mu)) * (ps.R_up[nu] * u) - GaussianRational(p.upper(nu)) * (ps.R_up[mu] * u)));
  }
}

TEST(ProcaRelations, IrrepReducesToScalarSystem) {
  const auto rep = builtin_irrep_1p1();
  const auto r = proca_relations_check(rep, build_projectors(rep), solution_space(rep, mom({5, 4}, 3)));
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_GT(r.identities_checked, 10u);
}

TEST(ProcaRelations, TrivialIsVacuous) {
  const auto rep = trivial_rep(2);
  const auto r = proca_relations_check(rep, build_projectors(rep), solution_space(rep, mom({5, 4}, 3)));
  EXPECT_EQ(r.status, CheckStatus::vacuous);
}

TEST(ProcaRelations, Guards) {
  const auto irrep = builtin_irrep_1p1();
  EXPECT_THROW(proca_relations_check(irrep, build_projectors(irrep), solution_space(irrep, mom({1, 1}, 1))),
               PreconditionError);
  const auto v3 = build_vector_rep(3);
  EXPECT_THROW(proca_relations_check(v3, build_projectors(v3), solution_space(v3, mom({5, 4, 0}, 3))),
               PreconditionError);
}

TEST(FieldMap, MovingFrame) {
  const auto p = mom({5, 4}, 3);
  const auto fm = field_map_check(p);
  EXPECT_EQ(fm.check.status, CheckStatus::pass);
  // independent arithmetic on the kernel vector (3i/5, 4/5, 1)
  const GaussianRational m(3), phi = GaussianRational(Rational(0), make_rational(3, 5));
  EXPECT_EQ(fm.phi, phi);
  EXPECT_EQ(fm.F01 / m, phi);
  EXPECT_EQ(-fm.A0, (-t::kI * c(4) * phi) / m);
  EXPECT_EQ(-fm.A1, (-t::kI * c(5) * phi) / m);
  EXPECT_EQ(c(5) * fm.A0 - c(4) * fm.A1, c(0));  // p_mu A^mu
  EXPECT_EQ(fm.F01, -t::kI * c(5) * fm.A1 + t::kI * c(4) * fm.A0);
}

TEST(FieldMap, RestFrameHasNoTimeComponent) {
  const auto fm = field_map_check(mom({2, 0}, 2));
  EXPECT_EQ(fm.check.status, CheckStatus::pass);
  EXPECT_TRUE(fm.A0.is_zero());
  EXPECT_FALSE(fm.F01.is_zero());
}

TEST(FieldMap, Guards) {
  EXPECT_THROW(field_map_check(mom({1, 1}, 1)), PreconditionError);
  EXPECT_THROW(field_map_check(mom({5, 4, 0, 0}, 3)), PreconditionError);
}
