#pragma once

#include <optional>
#include <string>

#include "ptrg/eigen.hpp"
#include "ptrg/fixed_points.hpp"

namespace ptrg {

// IR convention: the flow parameter grows toward the infrared and a
// direction is IR-stable iff the corresponding eigenvalue of d beta / d g
// has positive real part (the Gaussian point is then fully unstable for
// eps > 0).
enum class FlowClass { ir_stable, ir_unstable, marginal };

std::string to_string(FlowClass c);

struct StabilityReport {
  std::array<Complex, 3> eigenvalues{};  // sorted by descending real part
  std::array<FlowClass, 3> classes{};
  double marginal_tol = 0.0;
  // Dominant coupling axis (0..2) per eigenvector; nullopt when the
  // eigenvector is not well defined (degenerate eigenvalue).
  std::array<std::optional<int>, 3> axis_alignment{};
  CouplingVec point{};          // where the Jacobian was evaluated
  bool refined = false;         // Newton refinement off the series seed succeeded
  double residual = 0.0;        // ||beta|| at the evaluation point
  bool line_zero_mode = false;  // exact tangent zero mode identified on a line
  std::string note;
};

// Evaluates the stability matrix at the fixed point and classifies the
// eigenvalues. The series coordinates seed a Newton refinement toward the
// true root of the truncated system at this eps (the raw series point
// carries an O(eps^3) residual that would swamp the exact line zero mode);
// when no nearby root exists the series point is used as-is and `refined`
// stays false. On the fixed lines the factorization beta2 = g2 X,
// beta3 = g3 X forces one exactly vanishing eigenvalue at any true root, so
// that mode is reported marginal whenever the evaluation point is a root.
StabilityReport classify(const FixedPoint& fp, const Complex& eps, double marginal_tol = 1e-9);

inline StabilityReport classify(const ExactFixedPoint& fp, const Complex& eps,
                                double marginal_tol = 1e-9) {
  return classify(to_numeric(fp), eps, marginal_tol);
}

// Stability matrix with eps-series entries, evaluated on the fixed-point
// series coordinates.
SeriesMat3 jacobian_series(const FixedPoint& fp);

// Eigenvalues of the stability matrix as eps-series (exact zero detection
// for the line tangent mode happens at the series level).
std::array<EpsSeries<Complex>, 3> stability_eigenvalues_series(const FixedPoint& fp);

}  // namespace ptrg
