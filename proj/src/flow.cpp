#include "ptrg/flow.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ptrg {

std::string to_string(Terminal t) {
  switch (t) {
    case Terminal::converged: return "converged";
    case Terminal::diverged: return "diverged";
    case Terminal::max_steps: return "max_steps";
  }
  return "max_steps";
}

namespace {

bool finite(const CouplingVec& g) {
  return std::isfinite(g.g1.real()) && std::isfinite(g.g1.imag()) && std::isfinite(g.g2.real()) &&
         std::isfinite(g.g2.imag()) && std::isfinite(g.g3.real()) && std::isfinite(g.g3.imag());
}

}  // namespace

std::vector<std::pair<std::string, CouplingVec>> numeric_roots(double k, double eps) {
  std::vector<std::pair<std::string, CouplingVec>> out;
  out.emplace_back("gaussian", CouplingVec{});
  std::vector<FixedPoint> fps;
  try {
    fps = known_fixed_points(Complex(k), 2);
  } catch (const std::domain_error&) {
    // exceptional point: only the Gaussian root is available as a target
    return out;
  }
  for (const auto& fp : fps) {
    if (fp.kind == FPKind::gaussian || fp.branch == Branch::conjugate) continue;
    const CouplingVec seed = eval_coords(fp, eps);
    const RefineResult rr = refine_numeric(seed, eps, 1e-12);
    if (!rr.converged) continue;
    if ((rr.g - seed).max_abs() > 0.25 * (seed.max_abs() + eps)) continue;
    out.emplace_back(to_string(fp.kind), rr.g);
  }
  return out;
}

FlowTrajectory integrate(const CouplingVec& g0, const FlowParams& p) {
  if (!(p.step > 0) || !(p.t_max > 0))
    throw std::invalid_argument("integrate: step and t_max must be positive");
  const Complex eps(p.eps, 0.0);
  const int stride = std::max(1, p.sample_stride);
  const long n_steps = static_cast<long>(std::ceil(p.t_max / p.step));

  FlowTrajectory tr;
  tr.eps = p.eps;
  if (std::abs(g0.g2) > 0) {
    tr.k0 = g0.g3 / g0.g2;
    tr.k0_defined = true;
  } else {
    tr.k0 = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  }

  auto rhs = [&](const CouplingVec& g) { return -1.0 * beta_full(g, eps); };

  CouplingVec g = g0;
  double t = 0.0;
  tr.samples.emplace_back(t, g);
  tr.max_norm = g.max_abs();
  tr.terminal = Terminal::max_steps;

  for (long step_i = 0; step_i < n_steps; ++step_i) {
    if (beta_norm(g, eps) < p.conv_tol) {
      tr.terminal = Terminal::converged;
      break;
    }
    const double h = p.step;
    const CouplingVec k1 = rhs(g);
    const CouplingVec k2 = rhs(g + 0.5 * h * k1);
    const CouplingVec k3 = rhs(g + 0.5 * h * k2);
    const CouplingVec k4 = rhs(g + h * k3);
    const CouplingVec next = g + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!finite(next) || next.max_abs() > p.div_norm) {
      tr.terminal = Terminal::diverged;  // last valid sample retained
      break;
    }
    g = next;
    t += h;
    tr.max_norm = std::max(tr.max_norm, g.max_abs());
    if (tr.k0_defined && std::abs(g.g2) > 1e-6)
      tr.invariant_drift = std::max(tr.invariant_drift, std::abs(g.g3 / g.g2 - tr.k0));
    if (step_i % stride == stride - 1 || step_i == n_steps - 1)
      tr.samples.emplace_back(t, g);
  }
  if (tr.samples.back().first != t) tr.samples.emplace_back(t, g);

  if (tr.terminal == Terminal::converged ||
      (tr.terminal == Terminal::max_steps && beta_norm(g, eps) < p.conv_tol)) {
    tr.terminal = Terminal::converged;
    tr.converged_to = "other";
    const double k_match = tr.k0_defined ? tr.k0.real() : 0.0;
    for (const auto& [name, root] : numeric_roots(k_match, p.eps)) {
      if ((g - root).max_abs() < 1e-6) {
        tr.converged_to = name;
        break;
      }
    }
  }
  return tr;
}

std::vector<FlowTrajectory> integrate_batch(std::span<const CouplingVec> starts,
                                            const FlowParams& p, Execution exec) {
  if (!(p.step > 0) || !(p.t_max > 0))  // validate before entering the parallel region
    throw std::invalid_argument("integrate: step and t_max must be positive");
  std::vector<FlowTrajectory> out(starts.size());
  const long n = static_cast<long>(starts.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) out[i] = integrate(starts[i], p);
  } else {
    for (long i = 0; i < n; ++i) out[i] = integrate(starts[i], p);
  }
  return out;
}

VectorField vector_field(double k, std::pair<double, double> g1_range,
                         std::pair<double, double> g2_range, int nx, int ny, double eps,
                         Execution exec) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("vector_field: grid must be at least 2x2");
  VectorField vf;
  vf.k = k;
  vf.eps = eps;
  vf.nx = nx;
  vf.ny = ny;
  vf.samples.resize(static_cast<std::size_t>(nx) * ny);

  const Complex ck(k, 0.0), ce(eps, 0.0);
  auto fill = [&](long idx) {
    const int iy = static_cast<int>(idx) / nx;
    const int ix = static_cast<int>(idx) % nx;
    const double g1 = g1_range.first + (g1_range.second - g1_range.first) * ix / (nx - 1);
    const double g2 = g2_range.first + (g2_range.second - g2_range.first) * iy / (ny - 1);
    const auto b = beta_reduced<Complex>(Complex(g1, 0.0), Complex(g2, 0.0), ck, ce);
    vf.samples[idx] = {g1, g2, -b[0], -b[1]};
  };
  const long total = static_cast<long>(vf.samples.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < total; ++i) fill(i);
  } else {
    for (long i = 0; i < total; ++i) fill(i);
  }

  vf.lines_present = k * k < 1.0;
  try {
    for (const auto& fp : known_fixed_points(Complex(k), 2)) {
      if (fp.branch == Branch::conjugate) continue;
      if ((fp.kind == FPKind::ising_line || fp.kind == FPKind::cubic_line) && !vf.lines_present)
        continue;  // broken phase: line couplings are complex, nothing to draw
      vf.real_points.emplace_back(to_string(fp.kind), eval_coords(fp, Complex(eps, 0.0)));
    }
  } catch (const std::domain_error&) {
    // exceptional point: the lines diverge, only the isolated points remain
    vf.lines_present = false;
    vf.real_points.emplace_back("gaussian", CouplingVec{});
    FixedPoint heis;
    heis.kind = FPKind::heisenberg;
    heis.coords[0] = EpsSeries<Complex>(2, {Complex(0), Complex(0.6, 0), Complex(0.36, 0)});
    vf.real_points.emplace_back("heisenberg", eval_coords(heis, Complex(eps, 0.0)));
  }
  return vf;
}

}  // namespace ptrg
