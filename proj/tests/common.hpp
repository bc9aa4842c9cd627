#pragma once

#include <gtest/gtest.h>

#include <random>

#include "dkp/dkp.hpp"
#include "oracle.hpp"

namespace t {

using dkp::GaussianRational;
using dkp::Matrix;
using dkp::Rational;

inline GaussianRational c(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }
inline const GaussianRational kI = GaussianRational::i();

inline Matrix sigma_x() { return {{c(0), c(1)}, {c(1), c(0)}}; }
inline Matrix sigma_y() { return {{c(0), c(0, -1)}, {c(0, 1), c(0)}}; }
inline Matrix sigma_z() { return {{c(1), c(0)}, {c(0), c(-1)}}; }

/// The builtin (1+1) irrep typed in by hand.
inline Matrix irrep_b0() { return {{c(0), c(0), c(0, 1)}, {c(0), c(0), c(0)}, {c(0, -1), c(0), c(0)}}; }
inline Matrix irrep_b1() { return {{c(0), c(0, 1), c(0)}, {c(0, 1), c(0), c(0)}, {c(0), c(0), c(0)}}; }

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline dkp::Momentum mom(std::vector<long> p, long m) {
  std::vector<Rational> q;
  for (long x : p) q.emplace_back(x);
  return dkp::Momentum(q, Rational(m));
}

/// True when the two columns are proportional (all 2x2 minors vanish).
inline bool proportional(const Matrix& u, const Matrix& v) {
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = i + 1; j < u.rows(); ++j)
      if (u(i, 0) * v(j, 0) != u(j, 0) * v(i, 0)) return false;
  return true;
}

}  // namespace t
