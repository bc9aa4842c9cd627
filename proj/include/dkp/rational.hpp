#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and the Gaussian
// rationals Q(i) built on top of them.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dkp/errors.hpp"

namespace dkp {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational conj(const Rational& x) { return x; }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// gcd(|num|, den) == 1 and den >= 1.
inline bool is_canonical(const Rational& x) {
  if (sgn(x.get_den()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return g == 1;
}

/// Canonical text form: "0", "7", "-3/2".
inline std::string to_string(const Rational& x) { return x.get_str(10); }

/// Accepts `-?[0-9]+(/[0-9]+)?` with a nonzero denominator. Non-reduced
/// input such as "2/4" is accepted and canonicalized.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == num_begin) throw fail();
  const std::size_t num_end = pos;
  std::size_t den_begin = 0, den_end = 0;
  if (pos < text.size()) {
    if (text[pos] != '/') throw fail();
    den_begin = ++pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    den_end = pos;
    if (den_end == den_begin || pos != text.size()) throw fail();
  }
  Integer num(std::string(text.substr(0, num_end)), 10);
  Integer den(1);
  if (den_end > den_begin) den = Integer(std::string(text.substr(den_begin, den_end - den_begin)), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact square root when x is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// a + b i with a, b rational.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit lift Q -> Q(i)
  GaussianRational(long real) : re(real) {}                 // NOLINT
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_real() const { return sgn(im) == 0; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  /// |z|^2
  Rational norm() const { return Rational(re * re + im * im); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    const Rational n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re), Rational(-a.im)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline GaussianRational conj(const GaussianRational& z) { return {z.re, Rational(-z.im)}; }
inline bool is_canonical(const GaussianRational& z) { return is_canonical(z.re) && is_canonical(z.im); }

/// Human-readable form used in diagnostics: "3/2", "-i", "1/2-3i".
inline std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  std::string im_part;
  if (z.im == 1) im_part = "i";
  else if (z.im == -1) im_part = "-i";
  else im_part = to_string(z.im) + "i";
  if (sgn(z.re) == 0) return im_part;
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im_part;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

/// Exact square root in Q(i), if one exists.
inline std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational{};
  // w = u + iv, u^2 - v^2 = re, 2uv = im, u^2 + v^2 = |z|
  const auto modulus = rational_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  const auto u = rational_sqrt(Rational((*modulus + z.re) / 2));
  const auto v = rational_sqrt(Rational((*modulus - z.re) / 2));
  if (!u || !v) return std::nullopt;
  GaussianRational w{*u, sgn(z.im) < 0 ? Rational(-*v) : *v};
  if (w * w != z) return std::nullopt;
  return w;
}

}  // namespace dkp
