#pragma once

#include <array>
#include <string>

#include "ptrg/scalar.hpp"

namespace ptrg {

// Quartic couplings of the Lagrangian. The quadratic coefficient m2 is
// carried for completeness but never evolved; its scaling is captured by
// eta2 through nu.
struct ModelCouplings {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double m2 = 0.0;
};

enum class PTPhase { unbroken, broken, exceptional };

std::string to_string(PTPhase p);

// g1 = 3(u - 6v), g2 = 24 v, g3 = 24 w. Exact linear bijection.
template <class F>
std::array<F, 3> physical_to_tensor(const F& u, const F& v, const F& w) {
  auto r = [](long n) { return scalar_traits<F>::from_rat(n); };
  return {r(3) * (u - r(6) * v), r(24) * v, r(24) * w};
}

template <class F>
std::array<F, 3> tensor_to_physical(const F& g1, const F& g2, const F& g3) {
  auto r = [](long n, long d = 1) { return scalar_traits<F>::from_rat(n, d); };
  const F v = g2 * r(1, 24);
  return {g1 * r(1, 3) + r(6) * v, v, g3 * r(1, 24)};
}

// Unbroken for v^2 > w^2, broken for v^2 < w^2, exceptional on the cone.
PTPhase pt_phase(double v, double w, double tol = 0.0);

// sqrt(v^2 - w^2): the coefficient of the cos(4 theta) term after the phase
// reparametrization. Real in the unbroken phase, positive-imaginary in the
// broken one.
Complex hermitian_equivalent_coupling(double v, double w);

// N_d = 2 / ((4 pi)^{d/2} Gamma(d/2)); converts raw couplings to tilde
// couplings g~ = N_4 g.
double nd_constant(double d);

}  // namespace ptrg
