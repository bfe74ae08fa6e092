#include "ptrg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "ptrg/exponents.hpp"
#include "ptrg/model_map.hpp"
#include "ptrg/serialize.hpp"
#include "ptrg/stability.hpp"
#include "ptrg/tensor.hpp"

namespace ptrg {

namespace {

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("PTRG_OUTDIR"); dir && *dir)
      p = std::filesystem::path(dir) / p;
  }
  return p;
}

void emit_text(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
    return;
  }
  const auto p = resolve_output(out);
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::domain_error("cannot open output path: " + p.string());
  f << content;
  f.flush();
  if (!f) throw std::domain_error("write failed: " + p.string());
}

void emit_json(const std::string& out, const nlohmann::json& j) {
  emit_text(out, j.dump(2) + "\n");
}

struct KInput {
  Rational exact;
  double numeric = 0.0;
  bool exact_line = false;  // 1 - k^2 has an exact square root
};

KInput parse_k(const std::string& text) {
  const auto r = parse_rational(text);
  if (!r) throw CLI::ValidationError("--k", "cannot parse '" + text + "' as a rational or decimal");
  KInput k;
  k.exact = *r;
  k.numeric = to_double(*r);
  const Rational omega = 1 - (*r) * (*r);
  if (omega == 0) throw std::domain_error("exceptional point: fixed lines diverge at k = ±1");
  k.exact_line = sqrt_rational(omega).has_value() || sqrt_rational(Rational(-omega)).has_value();
  return k;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t count,
                                  const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      out.push_back(std::stod(piece));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "cannot parse '" + piece + "' as a number");
    }
  }
  if (out.size() != count)
    throw CLI::ValidationError(flag, "expected " + std::to_string(count) + " comma-separated values");
  return out;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // reproducible across platforms
}

void cmd_derive(const std::string& out) {
  const auto gt = assemble_coupling_symbolic();
  const auto bt = beta_tensor(gt, true);
  const auto pr = project_basis(bt);
  const auto eta_d = eta_tensor(gt);
  const auto eta2_d = eta2_tensor(gt);
  const bool match = pr.residual_zero && pr.p1 == beta_poly(1) && pr.p2 == beta_poly(2) &&
                     pr.p3 == beta_poly(3) && eta_d == eta_poly() && eta2_d == eta2_poly();
  if (!match)
    throw std::domain_error("tensor-contraction derivation disagrees with the closed-form tables");
  nlohmann::json j;
  j["beta1"] = json_poly(pr.p1);
  j["beta2"] = json_poly(pr.p2);
  j["beta3"] = json_poly(pr.p3);
  j["eta"] = json_poly(eta_d);
  j["eta2"] = json_poly(eta2_d);
  j["span_closed"] = pr.residual_zero;
  j["matches_closed_form"] = match;
  emit_json(out, j);
}

void cmd_fixpoints(const std::string& k_text, int order, const std::optional<double>& eps,
                   const std::string& out) {
  const KInput k = parse_k(k_text);
  nlohmann::json points = nlohmann::json::array();
  if (k.exact_line) {
    for (const auto& fp : known_fixed_points(ExactScalar(k.exact), order)) {
      auto j = json_fixed_point(fp);
      if (eps) {
        const CouplingVec v = eval_coords(to_numeric(fp), Complex(*eps, 0.0));
        j["value_at_eps"] = json_coupling_vec(v);
      }
      points.push_back(std::move(j));
    }
  } else {
    for (const auto& fp : known_fixed_points(Complex(k.numeric), order)) {
      auto j = json_fixed_point(fp);
      if (eps) j["value_at_eps"] = json_coupling_vec(eval_coords(fp, Complex(*eps, 0.0)));
      points.push_back(std::move(j));
    }
  }
  nlohmann::json j;
  j["k"] = k_text;
  j["order"] = order;
  j["exact"] = k.exact_line;
  if (eps) j["eps"] = *eps;
  j["fixed_points"] = points;
  emit_json(out, j);
}

void cmd_exponents(const std::string& k_text, int order, const std::string& out) {
  const KInput k = parse_k(k_text);
  nlohmann::json arr = nlohmann::json::array();
  if (k.exact_line) {
    for (const auto& fp : known_fixed_points(ExactScalar(k.exact), order)) {
      nlohmann::json j = json_exponents(exponents_at(fp));
      j["kind"] = to_string(fp.kind);
      j["branch"] = to_string(fp.branch);
      arr.push_back(std::move(j));
    }
  } else {
    for (const auto& fp : known_fixed_points(Complex(k.numeric), order)) {
      nlohmann::json j = json_exponents(exponents_at(fp));
      j["kind"] = to_string(fp.kind);
      j["branch"] = to_string(fp.branch);
      arr.push_back(std::move(j));
    }
  }
  nlohmann::json j;
  j["k"] = k_text;
  j["order"] = order;
  j["exact"] = k.exact_line;
  j["exponents"] = arr;
  emit_json(out, j);
}

void cmd_stability(double k, double eps, double tol, const std::string& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& fp : known_fixed_points(Complex(k), 2)) {
    nlohmann::json j = json_report(classify(fp, Complex(eps, 0.0), tol));
    j["kind"] = to_string(fp.kind);
    j["branch"] = to_string(fp.branch);
    arr.push_back(std::move(j));
  }
  nlohmann::json j;
  j["k"] = k;
  j["eps"] = eps;
  j["reports"] = arr;
  emit_json(out, j);
}

void cmd_scan_k(double from, double to, int steps, double eps, bool serial,
                const std::string& out) {
  if (steps < 2) throw CLI::ValidationError("--steps", "need at least 2 samples");
  struct Row {
    double k = 0;
    bool exceptional = false;
    bool diverging = false;
    int n_branches = 1;
    std::array<Complex, 3> ising_p{}, cubic_p{}, ising_c{}, cubic_c{};
  };
  std::vector<Row> rows(static_cast<std::size_t>(steps));
  const Complex ce(eps, 0.0);
  auto fill = [&](long i) {
    Row& r = rows[i];
    r.k = from + (to - from) * static_cast<double>(i) / (steps - 1);
    const double omega = 1.0 - r.k * r.k;
    if (omega == 0.0) {
      r.exceptional = true;
      r.diverging = true;
      return;
    }
    r.diverging = std::abs(omega) < 1e-2;
    r.n_branches = omega < 0 ? 2 : 1;
    for (const auto& fp : known_fixed_points(Complex(r.k), 2)) {
      const CouplingVec v = eval_coords(fp, ce);
      const std::array<Complex, 3> a{v.g1, v.g2, v.g3};
      if (fp.kind == FPKind::ising_line)
        (fp.branch == Branch::principal ? r.ising_p : r.ising_c) = a;
      if (fp.kind == FPKind::cubic_line)
        (fp.branch == Branch::principal ? r.cubic_p : r.cubic_c) = a;
    }
  };
  const long n = steps;
  if (serial) {
    for (long i = 0; i < n; ++i) fill(i);
  } else {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) fill(i);
  }

  std::string csv =
      "k,branch,ising_g1_re,ising_g1_im,ising_g2_re,ising_g2_im,ising_g3_re,ising_g3_im,"
      "cubic_g1_re,cubic_g1_im,cubic_g2_re,cubic_g2_im,cubic_g3_re,cubic_g3_im,diverging\n";
  for (const Row& r : rows) {
    if (r.exceptional) {
      csv += format_double(r.k) + ",exceptional,,,,,,,,,,,,,1\n";
      continue;
    }
    auto line = [&](const char* branch, const std::array<Complex, 3>& is,
                    const std::array<Complex, 3>& cu) {
      std::string s = format_double(r.k);
      s += ",";
      s += branch;
      for (const auto& v : {is[0], is[1], is[2], cu[0], cu[1], cu[2]}) {
        s += "," + format_double(v.real()) + "," + format_double(v.imag());
      }
      s += r.diverging ? ",1\n" : ",0\n";
      return s;
    };
    csv += line("principal", r.ising_p, r.cubic_p);
    if (r.n_branches == 2) csv += line("conjugate", r.ising_c, r.cubic_c);
  }
  emit_text(out, csv);
}

void cmd_flow(double k, double eps, const std::string& traj, const std::string& grid,
              const std::string& g1_range, const std::string& g2_range, double t_max, double step,
              int stride, int random_starts, unsigned long seed, const std::string& box,
              bool serial, const std::string& out) {
  const Execution exec = serial ? Execution::serial : Execution::parallel;
  const int modes = (traj.empty() ? 0 : 1) + (grid.empty() ? 0 : 1) + (random_starts > 0 ? 1 : 0);
  if (modes != 1)
    throw CLI::ValidationError("flow", "choose exactly one of --traj, --grid, --random-starts");

  FlowParams p;
  p.eps = eps;
  p.t_max = t_max;
  p.step = step;
  p.sample_stride = stride;

  if (!traj.empty()) {
    const auto g0v = parse_doubles(traj, 3, "--traj");
    const CouplingVec g0{Complex(g0v[0], 0), Complex(g0v[1], 0), Complex(g0v[2], 0)};
    const FlowTrajectory tr = integrate(g0, p);
    std::ostringstream csv;
    write_trajectory_csv(csv, tr);
    emit_text(out, csv.str());
    if (!out.empty()) {
      nlohmann::json j;
      j["terminal"] = to_string(tr.terminal);
      if (tr.terminal == Terminal::converged) j["converged_to"] = tr.converged_to;
      j["invariant_drift"] = tr.invariant_drift;
      j["samples"] = tr.samples.size();
      std::cout << j.dump(2) << "\n";
    }
    return;
  }

  if (!grid.empty()) {
    const auto dims = parse_doubles(grid, 2, "--grid");
    const auto r1 = parse_doubles(g1_range, 2, "--g1-range");
    const auto r2 = parse_doubles(g2_range, 2, "--g2-range");
    const VectorField vf = vector_field(k, {r1[0], r1[1]}, {r2[0], r2[1]},
                                        static_cast<int>(dims[0]), static_cast<int>(dims[1]), eps,
                                        exec);
    std::ostringstream csv;
    write_field_csv(csv, vf);
    emit_text(out, csv.str());
    if (!out.empty()) {
      nlohmann::json pts = nlohmann::json::array();
      for (const auto& [name, g] : vf.real_points)
        pts.push_back({{"kind", name}, {"value", json_coupling_vec(g)}});
      nlohmann::json j;
      j["lines_present"] = vf.lines_present;
      j["real_points"] = pts;
      std::cout << j.dump(2) << "\n";
    }
    return;
  }

  // random near-origin starts on the plane g3 = k g2
  const auto bx = parse_doubles(box.empty() ? "0.001,0.1" : box, 2, "--box");
  std::mt19937_64 rng(seed);
  std::vector<CouplingVec> starts(static_cast<std::size_t>(random_starts));
  for (auto& g : starts) {
    const double g1 = bx[0] + (bx[1] - bx[0]) * uniform01(rng);
    const double g2 = bx[0] + (bx[1] - bx[0]) * uniform01(rng);
    g = {Complex(g1, 0), Complex(g2, 0), Complex(k * g2, 0)};
  }
  const auto trs = integrate_batch(starts, p, exec);
  int conv = 0, div = 0, maxed = 0;
  std::map<std::string, int> targets;
  double drift = 0;
  for (const auto& tr : trs) {
    if (tr.terminal == Terminal::converged) {
      ++conv;
      ++targets[tr.converged_to];
    } else if (tr.terminal == Terminal::diverged) {
      ++div;
    } else {
      ++maxed;
    }
    drift = std::max(drift, tr.invariant_drift);
  }
  nlohmann::json j;
  j["k"] = k;
  j["eps"] = eps;
  j["seed"] = seed;
  j["starts"] = random_starts;
  j["converged"] = conv;
  j["diverged"] = div;
  j["max_steps"] = maxed;
  j["converged_to"] = targets;
  j["max_invariant_drift"] = drift;
  emit_json(out, j);
}

void cmd_map(const std::string& u_text, const std::string& v_text, const std::string& w_text,
             double m2, const std::string& out) {
  const auto u = parse_rational(u_text), v = parse_rational(v_text), w = parse_rational(w_text);
  if (!u) throw CLI::ValidationError("--u", "cannot parse '" + u_text + "'");
  if (!v) throw CLI::ValidationError("--v", "cannot parse '" + v_text + "'");
  if (!w) throw CLI::ValidationError("--w", "cannot parse '" + w_text + "'");
  if (*u <= 0) throw std::domain_error("stability requires u > 0");
  const auto g = physical_to_tensor<ExactScalar>(ExactScalar(*u), ExactScalar(*v), ExactScalar(*w));
  const double vd = to_double(*v), wd = to_double(*w);
  const double n4 = nd_constant(4.0);

  nlohmann::json j;
  j["u"] = to_string(*u);
  j["v"] = to_string(*v);
  j["w"] = to_string(*w);
  j["m2"] = m2;
  j["g"] = {to_string(g[0]), to_string(g[1]), to_string(g[2])};
  j["g_numeric"] = {json_value(g[0].to_complex()), json_value(g[1].to_complex()),
                    json_value(g[2].to_complex())};
  j["g_tilde"] = {json_value(n4 * g[0].to_complex()), json_value(n4 * g[1].to_complex()),
                  json_value(n4 * g[2].to_complex())};
  j["n4"] = n4;
  j["pt_phase"] = to_string(pt_phase(vd, wd));
  j["hermitian_equivalent_coupling"] = json_value(hermitian_equivalent_coupling(vd, wd));
  if (*v != 0) {
    const Rational kk((*w) / (*v));
    j["k"] = to_string(kk);
  } else {
    j["k"] = nullptr;
  }
  emit_json(out, j);
}

}  // namespace

int run_cli(int argc, const char* const argv[]) {
  CLI::App app{"Two-loop RG toolkit for a U(1) scalar model with non-Hermitian Z4 anisotropy"};
  app.require_subcommand(1);

  // derive
  auto* derive = app.add_subcommand(
      "derive", "Derive beta/eta/eta2 by tensor contraction and check the closed forms");
  auto d_out = std::make_shared<std::string>();
  derive->add_option("-o,--output", *d_out, "output file (default stdout)");
  derive->callback([d_out] { cmd_derive(*d_out); });

  // fixpoints
  auto* fixp = app.add_subcommand("fixpoints", "Fixed points and fixed-line points at parameter k");
  auto f_k = std::make_shared<std::string>();
  auto f_eps = std::make_shared<double>();
  auto f_order = std::make_shared<int>(2);
  auto f_out = std::make_shared<std::string>();
  fixp->add_option("--k", *f_k, "line parameter k = g3/g2 (rational or decimal)")->required();
  auto* f_eps_opt = fixp->add_option("--eps", *f_eps, "also evaluate the series at this eps");
  fixp->add_option("--order", *f_order, "series truncation order (0..2)")
      ->check(CLI::Range(0, 2));
  fixp->add_option("-o,--output", *f_out, "output file (default stdout)");
  fixp->callback([f_k, f_eps, f_order, f_out, f_eps_opt] {
    std::optional<double> eps;
    if (f_eps_opt->count() > 0) eps = *f_eps;
    cmd_fixpoints(*f_k, *f_order, eps, *f_out);
  });

  // exponents
  auto* expo = app.add_subcommand("exponents", "Critical exponents eta, eta2, nu per fixed point");
  auto e_k = std::make_shared<std::string>();
  auto e_order = std::make_shared<int>(2);
  auto e_out = std::make_shared<std::string>();
  expo->add_option("--k", *e_k, "line parameter k (rational or decimal)")->required();
  expo->add_option("--order", *e_order, "series truncation order (0..2)")->check(CLI::Range(0, 2));
  expo->add_option("-o,--output", *e_out, "output file (default stdout)");
  expo->callback([e_k, e_order, e_out] { cmd_exponents(*e_k, *e_order, *e_out); });

  // stability
  auto* stab = app.add_subcommand("stability", "Stability reports at concrete eps");
  auto s_k = std::make_shared<double>();
  auto s_eps = std::make_shared<double>();
  auto s_tol = std::make_shared<double>(1e-9);
  auto s_out = std::make_shared<std::string>();
  stab->add_option("--k", *s_k, "line parameter k")->required();
  stab->add_option("--eps", *s_eps, "eps = 4 - d")->required();
  stab->add_option("--tol", *s_tol, "marginal classification tolerance");
  stab->add_option("-o,--output", *s_out, "output file (default stdout)");
  stab->callback([s_k, s_eps, s_tol, s_out] { cmd_stability(*s_k, *s_eps, *s_tol, *s_out); });

  // scan-k
  auto* scan = app.add_subcommand("scan-k", "Line couplings versus k (CSV)");
  auto sc_from = std::make_shared<double>(), sc_to = std::make_shared<double>();
  auto sc_eps = std::make_shared<double>(1.0);
  auto sc_steps = std::make_shared<int>();
  auto sc_serial = std::make_shared<bool>(false);
  auto sc_out = std::make_shared<std::string>();
  scan->add_option("--from", *sc_from, "first k")->required();
  scan->add_option("--to", *sc_to, "last k")->required();
  scan->add_option("--steps", *sc_steps, "number of samples (inclusive)")->required();
  scan->add_option("--eps", *sc_eps, "eps at which the series are evaluated");
  scan->add_flag("--serial", *sc_serial, "disable the parallel sampling lane");
  scan->add_option("-o,--output", *sc_out, "output file (default stdout)");
  scan->callback([sc_from, sc_to, sc_steps, sc_eps, sc_serial, sc_out] {
    cmd_scan_k(*sc_from, *sc_to, *sc_steps, *sc_eps, *sc_serial, *sc_out);
  });

  // flow
  auto* flow = app.add_subcommand("flow", "RG trajectories and flow vector fields");
  auto fl_k = std::make_shared<double>(0.0);
  auto fl_eps = std::make_shared<double>();
  auto fl_traj = std::make_shared<std::string>(), fl_grid = std::make_shared<std::string>();
  auto fl_r1 = std::make_shared<std::string>("0,1"), fl_r2 = std::make_shared<std::string>("0,1");
  auto fl_tmax = std::make_shared<double>(10.0), fl_step = std::make_shared<double>(1e-3);
  auto fl_stride = std::make_shared<int>(1);
  auto fl_random = std::make_shared<int>(0);
  auto fl_seed = std::make_shared<unsigned long>(0);
  auto fl_box = std::make_shared<std::string>();
  auto fl_serial = std::make_shared<bool>(false);
  auto fl_out = std::make_shared<std::string>();
  flow->add_option("--k", *fl_k, "line parameter (for --grid and --random-starts)");
  flow->add_option("--eps", *fl_eps, "eps = 4 - d")->required();
  flow->add_option("--traj", *fl_traj, "integrate one trajectory from g1,g2,g3");
  flow->add_option("--grid", *fl_grid, "sample the reduced IR field on an NX,NY grid");
  flow->add_option("--g1-range", *fl_r1, "grid g1 range lo,hi");
  flow->add_option("--g2-range", *fl_r2, "grid g2 range lo,hi");
  flow->add_option("--t-max", *fl_tmax, "integration horizon");
  flow->add_option("--step", *fl_step, "RK4 step");
  flow->add_option("--stride", *fl_stride, "record every Nth sample");
  flow->add_option("--random-starts", *fl_random, "integrate N random near-origin starts");
  flow->add_option("--seed", *fl_seed, "seed for --random-starts");
  flow->add_option("--box", *fl_box, "start box lo,hi for --random-starts");
  flow->add_flag("--serial", *fl_serial, "disable the parallel batch lane");
  flow->add_option("-o,--output", *fl_out, "output file (default stdout)");
  flow->callback([=] {
    cmd_flow(*fl_k, *fl_eps, *fl_traj, *fl_grid, *fl_r1, *fl_r2, *fl_tmax, *fl_step, *fl_stride,
             *fl_random, *fl_seed, *fl_box, *fl_serial, *fl_out);
  });

  // map
  auto* map_cmd = app.add_subcommand("map", "Map Lagrangian couplings (u,v,w) to tensor couplings");
  auto m_u = std::make_shared<std::string>(), m_v = std::make_shared<std::string>(),
       m_w = std::make_shared<std::string>();
  auto m_m2 = std::make_shared<double>(0.0);
  auto m_out = std::make_shared<std::string>();
  map_cmd->add_option("--u", *m_u, "U(1)-symmetric quartic coupling (u > 0)")->required();
  map_cmd->add_option("--v", *m_v, "Hermitian Z4 coupling")->required();
  map_cmd->add_option("--w", *m_w, "anti-Hermitian Z4 coupling")->required();
  map_cmd->add_option("--m2", *m_m2, "quadratic coefficient (carried, not evolved)");
  map_cmd->add_option("-o,--output", *m_out, "output file (default stdout)");
  map_cmd->callback([m_u, m_v, m_w, m_m2, m_out] { cmd_map(*m_u, *m_v, *m_w, *m_m2, *m_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace ptrg
