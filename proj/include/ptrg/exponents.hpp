#pragma once

#include "ptrg/fixed_points.hpp"

namespace ptrg {

// Critical exponents at a fixed point, all obtained by substituting the
// fixed-point series into the anomalous-dimension polynomials; nothing is
// hand-copied from final values.
template <class F>
struct ExponentSetT {
  EpsSeries<F> eta{2}, eta2{2}, nu{2};
  bool is_real = false;
  F k_used{};
};

namespace detail {

inline bool coeffs_real(const EpsSeries<ExactScalar>& s) {
  for (int m = 0; m <= s.order(); ++m)
    if (!(s[m].im == 0)) return false;
  return true;
}
inline bool coeffs_real(const EpsSeries<Complex>& s) {
  for (int m = 0; m <= s.order(); ++m)
    if (std::abs(s[m].imag()) >= 1e-12) return false;
  return true;
}

}  // namespace detail

template <class F>
EpsSeries<F> eta_at(const FixedPointT<F>& fp) {
  return eta_poly().eval_series(fp.coords);
}

template <class F>
EpsSeries<F> eta2_at(const FixedPointT<F>& fp) {
  return eta2_poly().eval_series(fp.coords);
}

// nu = 1/(2 + eta2), truncated at the coordinate order.
template <class F>
EpsSeries<F> nu_at(const FixedPointT<F>& fp) {
  const auto e2 = eta2_at(fp);
  const auto two = EpsSeries<F>::constant(e2.order(), scalar_traits<F>::from_rat(2));
  return (two + e2).reciprocal();
}

template <class F>
ExponentSetT<F> exponents_at(const FixedPointT<F>& fp) {
  ExponentSetT<F> out;
  out.eta = eta_at(fp);
  out.eta2 = eta2_at(fp);
  const auto two = EpsSeries<F>::constant(out.eta2.order(), scalar_traits<F>::from_rat(2));
  out.nu = (two + out.eta2).reciprocal();
  out.is_real =
      detail::coeffs_real(out.eta) && detail::coeffs_real(out.eta2) && detail::coeffs_real(out.nu);
  out.k_used = fp.k;
  return out;
}

}  // namespace ptrg
