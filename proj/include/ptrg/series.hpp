#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ptrg/scalar.hpp"

namespace ptrg {

// Truncated power series in eps = 4 - d. All arithmetic discards
// coefficients beyond the truncation order; two-loop work uses order 2.
// Coefficient type C is ExactScalar or Complex.
template <class C>
class EpsSeries {
 public:
  explicit EpsSeries(int order) : c_(check_order(order) + 1) {}

  EpsSeries(int order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    check_order(order);
    if (static_cast<int>(c_.size()) != order + 1)
      throw std::invalid_argument("series coefficient count must be order+1");
  }

  static EpsSeries constant(int order, C value) {
    EpsSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  // The expansion variable itself.
  static EpsSeries eps(int order) {
    EpsSeries s(order);
    if (order >= 1) s.c_[1] = scalar_traits<C>::from_rat(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int m) const { return c_.at(m); }
  C& operator[](int m) { return c_.at(m); }
  const std::vector<C>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const C& x) { return scalar_traits<C>::is_zero(x); });
  }
  double max_abs() const {
    double m = 0;
    for (const C& x : c_) m = std::max(m, scalar_traits<C>::abs(x));
    return m;
  }

  friend EpsSeries operator-(const EpsSeries& s) {
    EpsSeries r = s;
    for (C& x : r.c_) x = -x;
    return r;
  }
  friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
    check_same(a, b);
    EpsSeries r = a;
    for (int m = 0; m <= r.order(); ++m) r.c_[m] += b.c_[m];
    return r;
  }
  friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) {
    check_same(a, b);
    EpsSeries r = a;
    for (int m = 0; m <= r.order(); ++m) r.c_[m] -= b.c_[m];
    return r;
  }
  // Cauchy product truncated at the common order.
  friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    check_same(a, b);
    EpsSeries r(a.order());
    for (int m = 0; m <= r.order(); ++m)
      for (int j = 0; j <= m; ++j) r.c_[m] += a.c_[j] * b.c_[m - j];
    return r;
  }
  friend EpsSeries operator*(const C& c, const EpsSeries& s) {
    EpsSeries r = s;
    for (C& x : r.c_) x = c * x;
    return r;
  }
  friend EpsSeries operator*(const EpsSeries& s, const C& c) { return c * s; }
  EpsSeries& operator+=(const EpsSeries& o) { return *this = *this + o; }
  EpsSeries& operator-=(const EpsSeries& o) { return *this = *this - o; }
  EpsSeries& operator*=(const EpsSeries& o) { return *this = *this * o; }

  friend bool operator==(const EpsSeries& a, const EpsSeries& b) {
    return a.c_ == b.c_;
  }

  // Multiplicative inverse: requires a nonzero constant term (otherwise the
  // series has a pole at eps = 0).
  EpsSeries reciprocal() const {
    if (scalar_traits<C>::is_zero(c_[0]))
      throw std::domain_error("series reciprocal: zero constant term");
    EpsSeries r(order());
    const C one = scalar_traits<C>::from_rat(1);
    r.c_[0] = one / c_[0];
    for (int m = 1; m <= order(); ++m) {
      C acc{};
      for (int j = 1; j <= m; ++j) acc += c_[j] * r.c_[m - j];
      r.c_[m] = -(acc / c_[0]);
    }
    return r;
  }

  EpsSeries pow(int e) const {
    EpsSeries r = constant(order(), scalar_traits<C>::from_rat(1));
    for (int t = 0; t < e; ++t) r = r * (*this);
    return r;
  }

  // Value of the truncated polynomial at a concrete point.
  C eval(const C& x) const {
    C acc{};
    for (int m = order(); m >= 0; --m) acc = acc * x + c_[m];
    return acc;
  }

  EpsSeries truncated(int new_order) const {
    check_order(new_order);
    EpsSeries r(new_order);
    for (int m = 0; m <= std::min(new_order, order()); ++m) r.c_[m] = c_[m];
    return r;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    return order;
  }
  static void check_same(const EpsSeries& a, const EpsSeries& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<C> c_;
};

inline EpsSeries<Complex> to_complex_series(const EpsSeries<ExactScalar>& s) {
  EpsSeries<Complex> r(s.order());
  for (int m = 0; m <= s.order(); ++m) r[m] = s[m].to_complex();
  return r;
}

}  // namespace ptrg
