#include <gtest/gtest.h>

#include "common.hpp"

using namespace dkp;
using t::c;

namespace {

Representation kron2() { return build_kronecker_rep(build_gamma(GammaBasis::dirac2), true); }
Representation kron4() { return build_kronecker_rep(build_gamma(GammaBasis::dirac4), true); }

std::vector<std::pair<oracle::M, oracle::M>> self_pairs(const Representation& rep) {
  std::vector<std::pair<oracle::M, oracle::M>> pairs;
  for (const auto& b : rep.betas()) pairs.emplace_back(oracle::from(b), oracle::from(b));
  return pairs;
}

void expect_reassembles(const Representation& rep, const DecompositionResult& res) {
  std::size_t total = 0;
  std::vector<Representation> parts;
  for (const auto& b : res.blocks) {
    total += b.basis.size();
    parts.push_back(b.subrep);
    EXPECT_EQ(restrict(rep, b.basis), b.subrep);
  }
  EXPECT_EQ(total, rep.dim());
  ASSERT_TRUE(is_invertible(res.change_of_basis));
  EXPECT_EQ(conjugate(rep, res.change_of_basis), direct_sum(parts));
}

}  // namespace

TEST(Commutant, KnownDimensions) {
  EXPECT_EQ(commutant(builtin_irrep_1p1()).dimension(), 1u);
  EXPECT_EQ(commutant(kron2()).dimension(), 2u);
  EXPECT_EQ(commutant(trivial_rep(2)).dimension(), 1u);
}

TEST(Commutant, AgreesWithBruteForce) {
  for (const auto& rep : {builtin_irrep_1p1(), kron2(), build_scalar_rep(3), trivial_rep(2, 2)})
    EXPECT_EQ(commutant(rep).dimension(), oracle::sylvester_dim(self_pairs(rep)));
}

TEST(Commutant, SixteenDimensionalKroneckerIsThree) {
  // brute-force value over 256 unknowns, frozen
  const auto k4 = kron4();
  EXPECT_EQ(oracle::sylvester_dim(self_pairs(k4)), 3u);
  const auto basis = commutant(k4);
  EXPECT_EQ(basis.dimension(), 3u);
  for (const auto& x : basis.basis)
    for (const auto& b : k4.betas()) EXPECT_EQ(x * b, b * x);
}

TEST(IsIrreducible, Verdicts) {
  const auto irrep = is_irreducible(builtin_irrep_1p1());
  EXPECT_TRUE(irrep.irreducible);
  EXPECT_EQ(irrep.field, "Q(i)");
  EXPECT_EQ(irrep.certificate.basis.front(), Matrix::identity(3));
  EXPECT_FALSE(is_irreducible(kron2()).irreducible);
  EXPECT_FALSE(is_irreducible(kron4()).irreducible);
  EXPECT_TRUE(is_irreducible(build_scalar_rep(4)).irreducible);
  EXPECT_TRUE(is_irreducible(build_vector_rep(4)).irreducible);
}

TEST(Decompose, KroneckerTwoSplitsOneThree) {
  const auto rep = kron2();
  const auto res = decompose(rep);
  EXPECT_EQ(res.block_dims(), (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(res.complete);
  ASSERT_EQ(res.blocks.size(), 2u);
  EXPECT_TRUE(res.blocks[0].trivial);
  for (const auto& b : res.blocks[0].subrep.betas()) EXPECT_TRUE(b.is_zero());
  EXPECT_TRUE(res.blocks[1].irreducible);
  expect_reassembles(rep, res);
}

TEST(Decompose, KroneckerFourSplitsOneFiveTen) {
  const auto rep = kron4();
  const auto res = decompose(rep);
  EXPECT_EQ(res.block_dims(), (std::vector<std::size_t>{1, 5, 10}));
  EXPECT_TRUE(res.complete);
  for (const auto& b : res.blocks) EXPECT_EQ(b.commutant_dim, 1u);
  expect_reassembles(rep, res);
}

TEST(Decompose, IrreducibleInputIsOneBlock) {
  const auto res = decompose(builtin_irrep_1p1());
  EXPECT_EQ(res.block_dims(), (std::vector<std::size_t>{3}));
  EXPECT_EQ(res.blocks[0].subrep, builtin_irrep_1p1());
}

TEST(Decompose, TrivialRepSplitsIntoLines) {
  const auto res = decompose(trivial_rep(2, 3));
  EXPECT_EQ(res.block_dims(), (std::vector<std::size_t>{1, 1, 1}));
  for (const auto& b : res.blocks) EXPECT_TRUE(b.trivial);
}

TEST(Decompose, BlockBasesKeepAdjointStructure) {
  for (const auto& b : decompose(kron2()).blocks) {
    EXPECT_TRUE(b.scalar_gram);
    const Matrix basis = Matrix::from_columns(b.basis);
    const Matrix gram = conj_transpose(basis) * basis;
    EXPECT_EQ(gram, gram(0, 0) * Matrix::identity(gram.rows()));
  }
}

TEST(Decompose, RejectsNonDkp) {
  EXPECT_THROW(decompose(build_kronecker_rep(build_gamma(GammaBasis::dirac2), false)), PreconditionError);
}

TEST(Decompose, SchurConsistency) {
  for (const auto& rep : {builtin_irrep_1p1(), kron2(), kron4(), build_scalar_rep(4), trivial_rep(2, 2)})
    EXPECT_GE(commutant(rep).dimension(), decompose(rep).blocks.size());
}

TEST(Intertwiner, KroneckerBlockToIrrep) {
  const auto block = decompose(kron2()).blocks.back().subrep;
  const auto irrep = builtin_irrep_1p1();
  const auto cert = intertwiner(block, irrep);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(intertwines(cert->S, block, irrep));
  EXPECT_EQ(rank(cert->S), 3u);
  const auto u = unitarize(*cert, block, irrep);
  ASSERT_TRUE(u.lambda.has_value());
  EXPECT_GT(*u.lambda, 0);
  EXPECT_EQ(conj_transpose(u.S) * u.S, GaussianRational(*u.lambda) * Matrix::identity(3));
  EXPECT_TRUE(u.unitarity == UnitarityStatus::witness || u.unitarity == UnitarityStatus::certified);
}

TEST(Intertwiner, ScalarAndVectorConstructionsAgreeInTwoDimensions) {
  const auto cert = intertwiner(build_scalar_rep(2), build_vector_rep(2));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->S, Matrix::identity(3));
  EXPECT_EQ(cert->solution_space_dim, 1u);
}

TEST(Intertwiner, SpinZeroAndSpinOneAreInequivalent) {
  EXPECT_FALSE(intertwiner(build_scalar_rep(4), build_vector_rep(4)).has_value());
  const auto res = decompose(kron4());
  EXPECT_FALSE(intertwiner(res.blocks[1].subrep, res.blocks[2].subrep).has_value());
  EXPECT_TRUE(intertwiner(res.blocks[1].subrep, build_scalar_rep(4)).has_value());
  EXPECT_TRUE(intertwiner(res.blocks[2].subrep, build_vector_rep(4)).has_value());
}

TEST(Intertwiner, SameDimensionInequivalent) {
  EXPECT_FALSE(intertwiner(builtin_irrep_1p1(), trivial_rep(2, 3)).has_value());
}

TEST(Intertwiner, MetricMismatchIsAnError) {
  EXPECT_THROW(intertwiner(builtin_irrep_1p1(), build_scalar_rep(4)), PreconditionError);
}

TEST(Unitarize, IdentityAndScaledIdentity) {
  const auto rep = builtin_irrep_1p1();
  IntertwinerCertificate cert;
  cert.S = Matrix::identity(3);
  auto u = unitarize(cert, rep, rep);
  EXPECT_EQ(u.unitarity, UnitarityStatus::witness);
  EXPECT_EQ(*u.lambda, 1);
  EXPECT_EQ(*u.unitary_witness, Matrix::identity(3));

  cert.S = c(2) * Matrix::identity(3);
  u = unitarize(cert, rep, rep);
  EXPECT_EQ(*u.lambda, 4);
  EXPECT_EQ(*u.unitary_witness, Matrix::identity(3));
}

TEST(Unitarize, IrrationalRootIsCertifiedNotMaterialized) {
  const auto rep = builtin_irrep_1p1();
  IntertwinerCertificate cert;
  cert.S = (c(1) + t::kI) * Matrix::identity(3);  // S^dagger S = 2 I
  const auto u = unitarize(cert, rep, rep);
  EXPECT_EQ(u.unitarity, UnitarityStatus::certified);
  EXPECT_EQ(*u.lambda, 2);
  EXPECT_FALSE(u.unitary_witness.has_value());
}

TEST(Unitarize, NonScalarGramIsReported) {
  auto rng = t::rng(31);
  const auto rep = builtin_irrep_1p1();
  const auto x = conjugate(rep, oracle::random_invertible(rng, 3));
  const auto cert = intertwiner(x, rep);
  ASSERT_TRUE(cert.has_value());
  const auto u = unitarize(*cert, x, rep);
  EXPECT_EQ(u.unitarity, UnitarityStatus::not_scalar);
  EXPECT_FALSE(u.lambda.has_value());
}

TEST(Unitarize, RejectsNonIntertwiner) {
  IntertwinerCertificate cert;
  cert.S = Matrix::diagonal({c(1), c(2), c(3)});
  EXPECT_THROW(unitarize(cert, builtin_irrep_1p1(), builtin_irrep_1p1()), PreconditionError);
}

TEST(Restrict, FullSpaceIsIdentity) {
  const auto rep = kron2();
  std::vector<Matrix> basis;
  for (std::size_t j = 0; j < rep.dim(); ++j) basis.push_back(Matrix::identity(rep.dim()).column(j));
  EXPECT_EQ(restrict(rep, basis), rep);
}

TEST(Restrict, CommonKernelIsTrivial) {
  const auto rep = kron2();
  const auto kernel = null_space(vstack(rep.betas()));
  ASSERT_EQ(kernel.size(), 1u);
  EXPECT_EQ(restrict(rep, kernel), trivial_rep(2));
}

TEST(Restrict, NonInvariantLineIsRejected) {
  const auto rep = builtin_irrep_1p1();
  const Matrix line{{c(1)}, {c(0)}, {c(0)}};
  try {
    (void)restrict(rep, {line});
    FAIL() << "expected InvariantSubspaceError";
  } catch (const InvariantSubspaceError& e) {
    EXPECT_EQ(e.mu, 0u);
    EXPECT_EQ(e.vector, rep.upper(0) * line);
  }
  EXPECT_THROW(restrict(rep, {line, line}), PreconditionError);
}

TEST(Equivalence, ReflexiveSymmetricTransitive) {
  auto rng = t::rng(32);
  const auto irrep = builtin_irrep_1p1();
  const auto block = decompose(kron2()).blocks.back().subrep;
  const auto hidden = conjugate(irrep, oracle::random_invertible(rng, 3));
  const std::vector<Representation> reps{irrep, build_scalar_rep(2), block, hidden};
  for (const auto& a : reps) {
    const auto self = intertwiner(a, a);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(intertwines(Matrix::identity(3), a, a));
    for (const auto& b : reps) {
      const auto ab = intertwiner(a, b);
      ASSERT_TRUE(ab.has_value());
      const auto inv = inverse(ab->S);
      ASSERT_TRUE(inv.has_value());
      EXPECT_TRUE(intertwines(*inv, b, a));
      for (const auto& cc : reps) {
        const auto bc = intertwiner(b, cc);
        ASSERT_TRUE(bc.has_value());
        EXPECT_TRUE(intertwines(bc->S * ab->S, a, cc));
      }
    }
  }
}

// Every (1+1) DKP representation built here is a sum of zero blocks and
// copies of the 3x3 irrep.
TEST(CentralTheorem, OnlySpinZeroInTwoDimensions) {
  auto rng = t::rng(33);
  const auto irrep = builtin_irrep_1p1();
  std::vector<Representation> reps{irrep, kron2(), build_scalar_rep(2), build_vector_rep(2), trivial_rep(2, 2)};
  reps.push_back(direct_sum({irrep, trivial_rep(2), irrep}));
  reps.push_back(conjugate(direct_sum({irrep, trivial_rep(2), irrep}), oracle::random_invertible(rng, 7)));
  reps.push_back(conjugate(direct_sum({kron2(), irrep}), oracle::random_invertible(rng, 7)));
  reps.push_back(conjugate(direct_sum({trivial_rep(2, 2), irrep}), oracle::random_invertible(rng, 5)));
  for (const auto& rep : reps) {
    ASSERT_TRUE(verify_dkp(rep).passed);
    const auto res = decompose(rep);
    EXPECT_TRUE(res.complete) << "dim " << rep.dim();
    expect_reassembles(rep, res);
    std::size_t copies = 0, zeros = 0;
    for (const auto& b : res.blocks) {
      if (b.trivial) {
        EXPECT_EQ(b.basis.size(), 1u);
        ++zeros;
        continue;
      }
      const auto cert = intertwiner(b.subrep, irrep);
      ASSERT_TRUE(cert.has_value()) << "block of dim " << b.basis.size();
      EXPECT_TRUE(intertwines(cert->S, b.subrep, irrep));
      ++copies;
    }
    EXPECT_EQ(copies * 3 + zeros, rep.dim());
  }
}
