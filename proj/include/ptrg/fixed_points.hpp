#pragma once

#include <string>
#include <vector>

#include "ptrg/beta.hpp"
#include "ptrg/series.hpp"

namespace ptrg {

enum class FPKind { gaussian, heisenberg, ising_line, cubic_line, numeric_other };
enum class Branch { principal, conjugate };

std::string to_string(FPKind k);
std::string to_string(Branch b);

// A fixed point (or a point on a fixed line at parameter k), with
// coordinates as eps-series. For k^2 > 1 the line couplings are complex;
// branch selects the sign of 1/sqrt(1-k^2), whose principal value is
// -i/sqrt(k^2-1) there.
template <class F>
struct FixedPointT {
  FPKind kind = FPKind::numeric_other;
  F k{};
  Branch branch = Branch::principal;
  std::array<EpsSeries<F>, 3> coords{EpsSeries<F>(2), EpsSeries<F>(2), EpsSeries<F>(2)};
};

using FixedPoint = FixedPointT<Complex>;
using ExactFixedPoint = FixedPointT<ExactScalar>;

// Closed-form fixed points and line points: Gaussian, Heisenberg, Ising(k),
// Cubic(k); for real k with k^2 > 1 the conjugate-branch partners are
// appended. Throws at the exceptional points k = ±1, and in the exact field
// when 1 - k^2 has no exact square root.
template <class F>
std::vector<FixedPointT<F>> known_fixed_points(const F& k, int order = 2);

// Order-by-order solver: leading-order roots of the reduced system (the g2
// factor of beta2 splits the root set into an axis branch and a line
// branch), then one linear solve per root for the eps^2 coefficients.
// Results are lifted to three couplings via g3 = k g2.
template <class F>
std::vector<FixedPointT<F>> solve_series(const F& k, int order = 2);

struct RefineResult {
  CouplingVec g;
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;
  std::string message;
};

// Damped Newton on the truncated beta functions at concrete eps. Seeds with
// g2 != 0 are refined in the reduced two-coupling system at fixed k = g3/g2
// (the full Jacobian is exactly singular along the lines) and lifted back.
RefineResult refine_numeric(const CouplingVec& seed, const Complex& eps, double tol = 1e-12);

CouplingVec eval_coords(const FixedPoint& fp, const Complex& eps);
FixedPoint to_numeric(const ExactFixedPoint& fp);

}  // namespace ptrg
