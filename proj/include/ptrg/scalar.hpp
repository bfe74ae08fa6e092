#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ptrg {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Exact square root when numerator and denominator are perfect squares.
std::optional<Rational> sqrt_rational(const Rational& r);

// Parses "p/q", "p", or a plain decimal ("0.62" -> 31/50). Decimal strings
// are exact rationals, so CLI inputs can stay in the exact pipeline.
std::optional<Rational> parse_rational(const std::string& text);

// Gaussian rational: complex number with exact rational parts. Coefficient
// field for all symbolic objects; denominators stay positive and fractions
// reduced because mpq_class keeps canonical form.
struct ExactScalar {
  Rational re{0};
  Rational im{0};

  ExactScalar() = default;
  ExactScalar(int v) : re(v) {}
  ExactScalar(long v) : re(v) {}
  ExactScalar(Rational r) : re(std::move(r)) {}
  ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static ExactScalar i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  ExactScalar conj() const { return {re, Rational(-im)}; }
  Complex to_complex() const { return {to_double(re), to_double(im)}; }

  friend ExactScalar operator-(const ExactScalar& x) {
    return {Rational(-x.re), Rational(-x.im)};
  }
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return {Rational(a.re + b.re), Rational(a.im + b.im)};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return {Rational(a.re - b.re), Rational(a.im - b.im)};
  }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    Rational n(b.re * b.re + b.im * b.im);
    if (n == 0) throw std::domain_error("division by zero ExactScalar");
    return {Rational((a.re * b.re + a.im * b.im) / n), Rational((a.im * b.re - a.re * b.im) / n)};
  }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }
};

// Exact square root for real-valued ExactScalar inputs (positive values map
// to rationals, negative ones to the principal branch i*sqrt|x|). Returns
// nullopt when no exact representation exists.
std::optional<ExactScalar> sqrt_exact(const ExactScalar& x);

std::string to_string(const ExactScalar& x);

// Uniform scalar operations so series/polynomial/solver code can run over
// either the exact field or complex doubles.
template <class F>
struct scalar_traits;

template <>
struct scalar_traits<ExactScalar> {
  static ExactScalar from_rat(long n, long d = 1) { return ExactScalar(rat(n, d)); }
  static ExactScalar from_exact(const ExactScalar& x) { return x; }
  static bool is_zero(const ExactScalar& x) { return x.is_zero(); }
  static ExactScalar conj(const ExactScalar& x) { return x.conj(); }
  static double abs(const ExactScalar& x) { return std::abs(x.to_complex()); }
  static std::optional<ExactScalar> sqrt(const ExactScalar& x) { return sqrt_exact(x); }
};

template <>
struct scalar_traits<Complex> {
  static Complex from_rat(long n, long d = 1) {
    return {static_cast<double>(n) / static_cast<double>(d), 0.0};
  }
  static Complex from_exact(const ExactScalar& x) { return x.to_complex(); }
  static bool is_zero(const Complex& x) { return x == 0.0; }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static double abs(const Complex& x) { return std::abs(x); }
  static std::optional<Complex> sqrt(const Complex& x) { return std::sqrt(x); }
};

template <class F>
F scalar_cast(const ExactScalar& x) {
  return scalar_traits<F>::from_exact(x);
}

}  // namespace ptrg
