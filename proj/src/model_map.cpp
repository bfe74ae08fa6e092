#include "ptrg/model_map.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptrg {

std::string to_string(PTPhase p) {
  switch (p) {
    case PTPhase::unbroken: return "unbroken";
    case PTPhase::broken: return "broken";
    case PTPhase::exceptional: return "exceptional";
  }
  return "exceptional";
}

PTPhase pt_phase(double v, double w, double tol) {
  if (tol < 0) throw std::invalid_argument("pt_phase: tol must be >= 0");
  const double d = v * v - w * w;
  if (d > tol) return PTPhase::unbroken;
  if (d < -tol) return PTPhase::broken;
  return PTPhase::exceptional;
}

Complex hermitian_equivalent_coupling(double v, double w) {
  return std::sqrt(Complex(v * v - w * w, 0.0));
}

double nd_constant(double d) {
  if (!(d > 0)) throw std::domain_error("nd_constant: d must be positive");
  return 2.0 / (std::pow(4.0 * std::numbers::pi, d / 2.0) * std::tgamma(d / 2.0));
}

}  // namespace ptrg
