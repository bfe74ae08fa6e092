#pragma once

#include <array>

#include "ptrg/poly.hpp"

namespace ptrg {

// Dimensionless tilde couplings (g~ = N_4 g).
struct CouplingVec {
  Complex g1{}, g2{}, g3{};

  std::array<Complex, 3> as_array() const { return {g1, g2, g3}; }
  friend CouplingVec operator+(const CouplingVec& a, const CouplingVec& b) {
    return {a.g1 + b.g1, a.g2 + b.g2, a.g3 + b.g3};
  }
  friend CouplingVec operator-(const CouplingVec& a, const CouplingVec& b) {
    return {a.g1 - b.g1, a.g2 - b.g2, a.g3 - b.g3};
  }
  friend CouplingVec operator*(double c, const CouplingVec& v) {
    return {c * v.g1, c * v.g2, c * v.g3};
  }
  double max_abs() const {
    return std::max({std::abs(g1), std::abs(g2), std::abs(g3)});
  }
};

struct Matrix3 {
  std::array<std::array<Complex, 3>, 3> m{};
  Complex& operator()(int i, int j) { return m[i][j]; }
  const Complex& operator()(int i, int j) const { return m[i][j]; }
};

// Two-loop component beta functions, hard-coded from the closed forms. The
// independent tensor-contraction route must reproduce these exactly; that
// equivalence is enforced by the test suite and by the `derive` command.
const CouplingPoly& beta_poly(int alpha);                  // alpha = 1..3
const std::array<CouplingPoly, 3>& beta_polys();
const CouplingPoly& eta_poly();
const CouplingPoly& eta2_poly();
// Common factor X with beta2 = g2 X and beta3 = g3 X; the source of the RG
// invariance of g3/g2.
const CouplingPoly& line_factor_poly();
// Symbolic stability matrix d beta_a / d g_b.
const std::array<std::array<CouplingPoly, 3>, 3>& jacobian_polys();

// Fast numeric paths used by solvers and integrators.
CouplingVec beta_full(const CouplingVec& g, const Complex& eps);
Matrix3 jacobian(const CouplingVec& g, const Complex& eps);

double beta_norm(const CouplingVec& g, const Complex& eps);

// Reduced system on the plane g3 = k g2; F is ExactScalar or Complex.
template <class F>
std::array<F, 2> beta_reduced(const F& g1, const F& g2, const F& k, const F& eps) {
  auto r = [](long n, long d) { return scalar_traits<F>::from_rat(n, d); };
  const F k2 = k * k;
  const F g1sq = g1 * g1, g2sq = g2 * g2;
  F b1 = -(eps * g1) + r(5, 3) * g1sq + g1 * g2 - r(3, 16) * k2 * g2sq - r(5, 3) * g1sq * g1 -
         r(11, 6) * g1sq * g2 + (r(23, 48) * k2 - r(5, 12)) * g1 * g2sq +
         r(3, 8) * k2 * g2sq * g2;
  F b2 = -(eps * g2) + r(3, 2) * g2sq + r(2, 1) * g1 * g2 -
         (r(1, 48) * k2 + r(17, 12)) * g2sq * g2 - r(23, 9) * g1sq * g2 - r(23, 6) * g1 * g2sq;
  return {b1, b2};
}

// k = g3/g2, conserved along the flow. Undefined on the Heisenberg axis.
Complex rg_invariant(const CouplingVec& g);

}  // namespace ptrg
