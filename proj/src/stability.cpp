#include "ptrg/stability.hpp"

#include <algorithm>
#include <cmath>

namespace ptrg {

std::string to_string(FlowClass c) {
  switch (c) {
    case FlowClass::ir_stable: return "ir_stable";
    case FlowClass::ir_unstable: return "ir_unstable";
    case FlowClass::marginal: return "marginal";
  }
  return "marginal";
}

StabilityReport classify(const FixedPoint& fp, const Complex& eps, double marginal_tol) {
  if (!(marginal_tol > 0)) throw std::invalid_argument("classify: marginal_tol must be positive");
  StabilityReport rep;
  rep.marginal_tol = marginal_tol;

  const CouplingVec seed = eval_coords(fp, eps);
  rep.point = seed;
  if (fp.kind != FPKind::numeric_other) {
    const RefineResult rr = refine_numeric(seed, eps, 1e-12);
    const double drift = (rr.g - seed).max_abs();
    // Reject refinements that wander to a different root; beyond the radius
    // of convergence of the truncated system Newton can fall onto the
    // Gaussian point.
    if (rr.converged && drift <= 0.25 * (seed.max_abs() + std::abs(eps))) {
      rep.point = rr.g;
      rep.refined = true;
    }
  }
  rep.residual = beta_norm(rep.point, eps);

  const Matrix3 j = jacobian(rep.point, eps);
  auto eig = eigen3(j);
  std::sort(eig.begin(), eig.end(),
            [](const Complex& a, const Complex& b) { return a.real() > b.real(); });
  rep.eigenvalues = eig;

  for (int i = 0; i < 3; ++i) {
    const double re = eig[i].real();
    rep.classes[i] = re > marginal_tol    ? FlowClass::ir_stable
                     : re < -marginal_tol ? FlowClass::ir_unstable
                                          : FlowClass::marginal;
  }

  const bool on_line = fp.kind == FPKind::ising_line || fp.kind == FPKind::cubic_line;
  if (on_line && rep.residual < 1e-8) {
    // beta2 g3 - beta3 g2 vanishes identically, so the line tangent is an
    // exact zero mode of the Jacobian at any root with g2 != 0.
    int zi = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(eig[i]) < std::abs(eig[zi])) zi = i;
    rep.classes[zi] = FlowClass::marginal;
    rep.line_zero_mode = true;
  }
  if (on_line)
    rep.note = "line tangent mode is exactly marginal at two loops";

  for (int i = 0; i < 3; ++i) {
    const auto v = eigenvector(j, eig[i]);
    if (!v) continue;
    int dom = 0;
    for (int c = 1; c < 3; ++c)
      if (std::abs((*v)[c]) > std::abs((*v)[dom])) dom = c;
    rep.axis_alignment[i] = dom;
  }
  return rep;
}

SeriesMat3 jacobian_series(const FixedPoint& fp) {
  const auto& jp = jacobian_polys();
  const int order = fp.coords[0].order();
  SeriesMat3 m{{{EpsSeries<Complex>(order), EpsSeries<Complex>(order), EpsSeries<Complex>(order)},
                {EpsSeries<Complex>(order), EpsSeries<Complex>(order), EpsSeries<Complex>(order)},
                {EpsSeries<Complex>(order), EpsSeries<Complex>(order), EpsSeries<Complex>(order)}}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m[a][b] = jp[a][b].eval_series(fp.coords);
  return m;
}

std::array<EpsSeries<Complex>, 3> stability_eigenvalues_series(const FixedPoint& fp) {
  return eigen3_series(jacobian_series(fp));
}

}  // namespace ptrg
