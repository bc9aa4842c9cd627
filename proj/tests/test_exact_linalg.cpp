#include <gtest/gtest.h>

#include "common.hpp"

using namespace dkp;
using t::c;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(0, -7)), "0");
  const Rational z = make_rational(0, 5);
  EXPECT_EQ(z.get_den(), 1);
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ParseIsStrictAndCanonicalizes) {
  EXPECT_EQ(parse_rational("2/4"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-3/2"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"), Rational("123456789012345678901234567890"));
  for (const char* bad : {"", "-", "1.5", "1/", "/2", "+1", "1/0", " 1", "1e3", "abc", "1/-2"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(Rational, ExactSquareRoot) {
  EXPECT_EQ(rational_sqrt(make_rational(9, 4)), make_rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
}

TEST(GaussianRational, ArithmeticMatchesReference) {
  auto rng = t::rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_matrix(rng, 1, 2);
    const GaussianRational a = m(0, 0), b = m(0, 1);
    const oracle::Z za{a.re, a.im}, zb{b.re, b.im};
    const auto prod = oracle::mul(za, zb);
    EXPECT_EQ(a * b, GaussianRational(prod.re, prod.im));
    const auto sum = oracle::add(za, zb);
    EXPECT_EQ(a + b, GaussianRational(sum.re, sum.im));
    if (!b.is_zero()) {
      const auto q = oracle::mul(za, oracle::inv(zb));
      EXPECT_EQ(a / b, GaussianRational(q.re, q.im));
      EXPECT_TRUE(is_canonical(a / b));
    }
  }
}

TEST(GaussianRational, ConjugationAndDivisionByZero) {
  const GaussianRational z(make_rational(1, 2), make_rational(-3));
  EXPECT_EQ(conj(z), GaussianRational(make_rational(1, 2), Rational(3)));
  EXPECT_EQ(to_string(z), "1/2-3i");
  EXPECT_EQ(z * conj(z), GaussianRational(z.norm()));
  EXPECT_THROW(z / GaussianRational(), std::domain_error);
  EXPECT_EQ(t::kI * t::kI, c(-1));
}

TEST(MatMul, IdentityTimesIdentity) { EXPECT_EQ(Matrix::identity(2) * Matrix::identity(2), Matrix::identity(2)); }

TEST(MatMul, IrrepBeta0SquaredIsDiag101) {
  const Matrix expected = Matrix::diagonal({c(1), c(0), c(1)});
  EXPECT_EQ(mat_mul(t::irrep_b0(), t::irrep_b0()), expected);
  EXPECT_EQ(oracle::to(oracle::mul(oracle::from(t::irrep_b0()), oracle::from(t::irrep_b0()))), expected);
}

TEST(MatMul, ScalarZeroAnnihilates) {
  auto rng = t::rng(1);
  const auto a = oracle::random_matrix(rng, 2, 5);
  const auto z = scalar_mul(GaussianRational(), a);
  EXPECT_EQ(z.rows(), 2u);
  EXPECT_EQ(z.cols(), 5u);
  EXPECT_TRUE(z.is_zero());
}

TEST(MatMul, ShapeMismatchNamesBothShapes) {
  try {
    (void)mat_mul(Matrix(2, 3), Matrix(2, 3));
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    EXPECT_NE(std::string(e.what()).find("2x3"), std::string::npos);
  }
  EXPECT_THROW((void)mat_add(Matrix(2, 3), Matrix(3, 2)), ShapeError);
}

TEST(ConjTranspose, IrrepBeta0IsHermitian) { EXPECT_EQ(conj_transpose(t::irrep_b0()), t::irrep_b0()); }

TEST(ConjTranspose, RealDiagonalIsFixed) {
  const auto d = Matrix::diagonal({c(3), c(-1), Rational(make_rational(2, 7))});
  EXPECT_EQ(conj_transpose(d), d);
}

TEST(ConjTranspose, Involution) {
  auto rng = t::rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto a = oracle::random_matrix(rng, 1 + k % 4, 1 + k % 3);
    EXPECT_EQ(conj_transpose(conj_transpose(a)), a);
  }
}

TEST(Kron, IdentityFactors) { EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4)); }

TEST(Kron, SigmaXTensorIdentityPattern) {
  const auto k = kron(t::sigma_x(), Matrix::identity(2));
  Matrix expected(4, 4);
  for (auto [i, j] : {std::pair{0, 2}, {1, 3}, {2, 0}, {3, 1}}) expected(i, j) = c(1);
  EXPECT_EQ(k, expected);
  EXPECT_EQ(k, oracle::to(oracle::kron(oracle::from(t::sigma_x()), oracle::eye(2))));
}

TEST(Kron, ZeroFactor) {
  auto rng = t::rng(3);
  const auto k = kron(oracle::random_matrix(rng, 2, 3), Matrix(3, 2));
  EXPECT_EQ(k.rows(), 6u);
  EXPECT_EQ(k.cols(), 6u);
  EXPECT_TRUE(k.is_zero());
}

TEST(Commutator, SelfAndIdentityVanish) {
  auto rng = t::rng(4);
  const auto a = oracle::random_matrix(rng, 3, 3);
  EXPECT_TRUE(commutator(a, a).is_zero());
  EXPECT_TRUE(commutator(Matrix::identity(3), a).is_zero());
}

TEST(Commutator, PauliXYGivesTwoISigmaZ) {
  EXPECT_EQ(commutator(t::sigma_x(), t::sigma_y()), c(0, 2) * t::sigma_z());
}

TEST(Commutator, ShapeMismatch) { EXPECT_THROW((void)commutator(Matrix(2, 2), Matrix(3, 3)), ShapeError); }

TEST(Rref, Identity) {
  const auto r = rref(Matrix::identity(3));
  EXPECT_EQ(r.reduced, Matrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ZeroMatrix) { EXPECT_EQ(rref(Matrix(2, 2)).rank, 0u); }

TEST(Rref, IrrepBeta1HasRankTwo) {
  EXPECT_EQ(rref(t::irrep_b1()).rank, 2u);
  EXPECT_EQ(oracle::rank(oracle::from(t::irrep_b1())), 2u);
}

TEST(Rref, ReducedFormShape) {
  auto rng = t::rng(5);
  for (int k = 0; k < 30; ++k) {
    const auto a = oracle::random_matrix(rng, 3, 4, true, 2);
    const auto r = rref(a);
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
      for (std::size_t i = 0; i < a.rows(); ++i) EXPECT_EQ(r.reduced(i, r.pivots[p]), i == p ? c(1) : c(0));
  }
}

TEST(NullSpace, InjectiveHasEmptyKernel) { EXPECT_TRUE(null_space(Matrix::identity(4)).empty()); }

TEST(NullSpace, ZeroMatrixGivesUnitVectors) {
  const auto k = null_space(Matrix(2, 3));
  ASSERT_EQ(k.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    Matrix e(3, 1);
    e(j, 0) = c(1);
    EXPECT_EQ(k[j], e);
  }
}

TEST(NullSpace, IrrepBeta0KillsMiddleCoordinate) {
  const auto k = null_space(t::irrep_b0());
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Matrix{{c(0)}, {c(1)}, {c(0)}}));
}

TEST(NullSpace, FreeVariableUnitPattern) {
  auto rng = t::rng(6);
  for (int n = 0; n < 20; ++n) {
    const auto a = oracle::random_matrix(rng, 2, 5, true, 2);
    const auto r = rref(a);
    const auto k = null_space(a);
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < 5; ++j)
      if (std::find(r.pivots.begin(), r.pivots.end(), j) == r.pivots.end()) free.push_back(j);
    ASSERT_EQ(k.size(), free.size());
    for (std::size_t v = 0; v < k.size(); ++v) {
      EXPECT_TRUE((a * k[v]).is_zero());
      for (std::size_t f = 0; f < free.size(); ++f) EXPECT_EQ(k[v](free[f], 0), f == v ? c(1) : c(0));
    }
  }
}

TEST(Sylvester, IdentityPairIsUnconstrained) {
  EXPECT_EQ(solve_sylvester_family<GaussianRational>({{Matrix::identity(2), Matrix::identity(2)}}).size(), 4u);
}

TEST(Sylvester, IrrepAgainstItselfIsScalars) {
  const std::vector<SylvesterPair<GaussianRational>> pairs{{t::irrep_b0(), t::irrep_b0()}, {t::irrep_b1(), t::irrep_b1()}};
  const auto basis = solve_sylvester_family(pairs);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], Matrix::identity(3));
  EXPECT_EQ(oracle::sylvester_dim({{oracle::from(t::irrep_b0()), oracle::from(t::irrep_b0())},
                                   {oracle::from(t::irrep_b1()), oracle::from(t::irrep_b1())}}),
            1u);
}

TEST(Sylvester, ZeroAgainstIdentityForcesZero) {
  EXPECT_TRUE(solve_sylvester_family<GaussianRational>({{Matrix(2, 2), Matrix::identity(2)}}).empty());
}

TEST(Sylvester, RectangularSolutionsAndMatchesReference) {
  const auto a = Matrix::diagonal({c(1), c(2)});
  const auto b = Matrix::diagonal({c(2), c(3), c(1)});
  const auto basis = solve_sylvester_family<GaussianRational>({{a, b}});
  EXPECT_EQ(basis.size(), oracle::sylvester_dim({{oracle::from(a), oracle::from(b)}}));
  EXPECT_EQ(basis.size(), 2u);
  for (const auto& x : basis) {
    EXPECT_EQ(x.rows(), 3u);
    EXPECT_EQ(x.cols(), 2u);
    EXPECT_EQ(x * a, b * x);
  }
}

TEST(Sylvester, Errors) {
  EXPECT_THROW(solve_sylvester_family<GaussianRational>({}), PreconditionError);
  EXPECT_THROW(solve_sylvester_family<GaussianRational>({{Matrix::identity(2), Matrix::identity(2)},
                                                         {Matrix::identity(3), Matrix::identity(2)}}),
               std::invalid_argument);
  EXPECT_THROW(solve_sylvester_family<GaussianRational>({{Matrix(2, 3), Matrix::identity(2)}}), std::invalid_argument);
}

TEST(Inverse, RoundTripAndSingular) {
  auto rng = t::rng(9);
  for (int k = 0; k < 10; ++k) {
    const auto a = oracle::random_invertible(rng, 4);
    const auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, Matrix::identity(4));
    EXPECT_FALSE(oracle::zero(oracle::det(oracle::from(a))));
  }
  EXPECT_FALSE(inverse(t::irrep_b0()).has_value());
  EXPECT_TRUE(oracle::zero(oracle::det(oracle::from(t::irrep_b0()))));
}

TEST(MinimalPolynomial, DiagonalAndNilpotent) {
  using V = std::vector<GaussianRational>;
  EXPECT_EQ(minimal_polynomial(Matrix::diagonal({c(1), c(2), c(1)})), (V{c(2), c(-3), c(1)}));
  const Matrix nil{{c(0), c(1)}, {c(0), c(0)}};
  EXPECT_EQ(minimal_polynomial(nil), (V{c(0), c(0), c(1)}));
}

// ------------------------------------------------------------ properties

TEST(Properties, RingAxioms) {
  auto rng = t::rng(11);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + k % 4;
    const auto a = oracle::random_matrix(rng, n, n), b = oracle::random_matrix(rng, n, n),
               d = oracle::random_matrix(rng, n, n);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ(a * b, oracle::to(oracle::mul(oracle::from(a), oracle::from(b))));
  }
}

TEST(Properties, RankNullity) {
  auto rng = t::rng(12);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = 1 + k % 5, cols = 1 + (k / 5) % 5;
    auto a = oracle::random_matrix(rng, r, cols, true, 1);
    EXPECT_EQ(rank(a) + null_space(a).size(), cols);
    EXPECT_EQ(rank(a), oracle::rank(oracle::from(a)));
  }
}

TEST(Properties, AdjointOfProduct) {
  auto rng = t::rng(13);
  for (int k = 0; k < 30; ++k) {
    const auto a = oracle::random_matrix(rng, 2, 3), b = oracle::random_matrix(rng, 3, 4);
    EXPECT_EQ(conj_transpose(a * b), conj_transpose(b) * conj_transpose(a));
  }
}

TEST(Properties, KronMixedProduct) {
  auto rng = t::rng(14);
  for (int k = 0; k < 20; ++k) {
    const auto a = oracle::random_matrix(rng, 2, 3), cmat = oracle::random_matrix(rng, 3, 2);
    const auto b = oracle::random_matrix(rng, 2, 2), d = oracle::random_matrix(rng, 2, 1);
    EXPECT_EQ(kron(a, b) * kron(cmat, d), kron(a * cmat, b * d));
    EXPECT_EQ(kron(a, b), oracle::to(oracle::kron(oracle::from(a), oracle::from(b))));
  }
}

TEST(Properties, EveryResultIsCanonical) {
  auto rng = t::rng(15);
  for (int k = 0; k < 30; ++k) {
    const auto a = oracle::random_matrix(rng, 3, 3), b = oracle::random_matrix(rng, 3, 3);
    EXPECT_TRUE(all_canonical(a * b));
    EXPECT_TRUE(all_canonical(a - b));
    EXPECT_TRUE(all_canonical(rref(a).reduced));
    for (const auto& v : null_space(a * Matrix::diagonal({c(1), c(0), c(1)}))) EXPECT_TRUE(all_canonical(v));
    if (auto inv = inverse(a)) {
      EXPECT_TRUE(all_canonical(*inv));
    }
  }
}
