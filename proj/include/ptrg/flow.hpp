#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptrg/fixed_points.hpp"

namespace ptrg {

// Batch surfaces run either serially (reference implementation) or under
// OpenMP; both produce bit-identical output since every work item is an
// independent pure computation written to its own slot.
enum class Execution { serial, parallel };

struct FlowParams {
  double eps = 1.0;
  double t_max = 10.0;
  double step = 1e-3;
  int sample_stride = 1;        // record every Nth step (first and last always)
  double conv_tol = 1e-10;      // ||beta|| below this terminates as converged
  double div_norm = 1e6;        // ||g|| above this terminates as diverged
};

enum class Terminal { converged, diverged, max_steps };

std::string to_string(Terminal t);

struct FlowTrajectory {
  double eps = 0.0;
  Complex k0{};                  // g3/g2 at the start; NaN when g2 = 0
  bool k0_defined = false;
  std::vector<std::pair<double, CouplingVec>> samples;
  Terminal terminal = Terminal::max_steps;
  std::string converged_to;      // fixed-point id, or "other"
  double invariant_drift = 0.0;  // max |g3/g2 - k0| while |g2| > 1e-6
  double max_norm = 0.0;         // sup ||g|| over the run
};

// RK4 integration of dg/dt = -beta(g) with t increasing toward the
// infrared. Divergence and non-finite values end the run with the last
// valid sample retained.
FlowTrajectory integrate(const CouplingVec& g0, const FlowParams& p);

std::vector<FlowTrajectory> integrate_batch(std::span<const CouplingVec> starts,
                                            const FlowParams& p,
                                            Execution exec = Execution::parallel);

struct FieldSample {
  double g1 = 0.0, g2 = 0.0;
  Complex v1{}, v2{};  // (-beta1, -beta2) of the reduced system (IR flow)
};

struct VectorField {
  double k = 0.0, eps = 0.0;
  int nx = 0, ny = 0;
  std::vector<FieldSample> samples;  // row-major over (iy, ix)
  // Real fixed points in the plane (series coordinates evaluated at eps).
  std::vector<std::pair<std::string, CouplingVec>> real_points;
  bool lines_present = false;  // false in the broken phase: lines are complex
};

VectorField vector_field(double k, std::pair<double, double> g1_range,
                         std::pair<double, double> g2_range, int nx, int ny, double eps,
                         Execution exec = Execution::parallel);

// Numeric roots of the truncated system at this (k, eps), found by Newton
// from the series seeds; used to label trajectory endpoints.
std::vector<std::pair<std::string, CouplingVec>> numeric_roots(double k, double eps);

}  // namespace ptrg
