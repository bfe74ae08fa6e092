#include "ptrg/fixed_points.hpp"

#include <cmath>
#include <stdexcept>

namespace ptrg {

std::string to_string(FPKind k) {
  switch (k) {
    case FPKind::gaussian: return "gaussian";
    case FPKind::heisenberg: return "heisenberg";
    case FPKind::ising_line: return "ising";
    case FPKind::cubic_line: return "cubic";
    case FPKind::numeric_other: return "other";
  }
  return "other";
}

std::string to_string(Branch b) { return b == Branch::principal ? "principal" : "conjugate"; }

namespace {

template <class F>
bool real_broken_phase(const F& k);

template <>
bool real_broken_phase<ExactScalar>(const ExactScalar& k) {
  return k.im == 0 && k.re * k.re > 1;
}

template <>
bool real_broken_phase<Complex>(const Complex& k) {
  return k.imag() == 0.0 && k.real() * k.real() > 1.0;
}

template <class F>
EpsSeries<F> series_from(int order, const F& c1, const F& c2) {
  EpsSeries<F> s(order);
  if (order >= 1) s[1] = c1;
  if (order >= 2) s[2] = c2;
  return s;
}

template <class F>
F exact_sqrt_or_throw(const F& x) {
  auto s = scalar_traits<F>::sqrt(x);
  if (!s)
    throw std::domain_error("no exact square root of 1 - k^2 in the exact field; use the numeric path");
  return *s;
}

template <class F>
void check_order(int order) {
  if (order < 0 || order > 2)
    throw std::invalid_argument("series order must be between 0 and 2 (two loops)");
}

}  // namespace

template <class F>
std::vector<FixedPointT<F>> known_fixed_points(const F& k, int order) {
  check_order<F>(order);
  using ST = scalar_traits<F>;
  auto r = [](long n, long d = 1) { return ST::from_rat(n, d); };
  const F one = r(1);
  const F omega = one - k * k;
  if (ST::is_zero(omega))
    throw std::domain_error("exceptional point: fixed lines diverge at k = ±1");

  std::vector<FixedPointT<F>> out;

  FixedPointT<F> gauss;
  gauss.kind = FPKind::gaussian;
  gauss.k = k;
  gauss.coords = {EpsSeries<F>(order), EpsSeries<F>(order), EpsSeries<F>(order)};
  out.push_back(gauss);

  FixedPointT<F> heis = gauss;
  heis.kind = FPKind::heisenberg;
  heis.coords[0] = series_from(order, r(3, 5), r(9, 25));
  out.push_back(heis);

  const F s_principal = one / exact_sqrt_or_throw(omega);
  const EpsSeries<F> A = series_from(order, r(1, 2), r(17, 54));
  const EpsSeries<F> B = series_from(order, r(2, 3), r(34, 81));

  auto line = [&](FPKind kind, Branch br, const F& s) {
    FixedPointT<F> fp;
    fp.kind = kind;
    fp.k = k;
    fp.branch = br;
    if (kind == FPKind::ising_line) {
      fp.coords[0] = A * (one - s);
      fp.coords[1] = B * s;
    } else {
      fp.coords[0] = A * (one + s);
      fp.coords[1] = B * (-s);
    }
    fp.coords[2] = k * fp.coords[1];
    return fp;
  };

  out.push_back(line(FPKind::ising_line, Branch::principal, s_principal));
  out.push_back(line(FPKind::cubic_line, Branch::principal, s_principal));
  if (real_broken_phase(k)) {
    out.push_back(line(FPKind::ising_line, Branch::conjugate, -s_principal));
    out.push_back(line(FPKind::cubic_line, Branch::conjugate, -s_principal));
  }
  return out;
}

template <class F>
std::vector<FixedPointT<F>> solve_series(const F& k, int order) {
  check_order<F>(order);
  using ST = scalar_traits<F>;
  auto r = [](long n, long d = 1) { return ST::from_rat(n, d); };
  const F one = r(1);
  const F k2 = k * k;
  const F omega = one - k2;
  if (ST::is_zero(omega))
    throw std::domain_error("exceptional point: degenerate leading-order roots at k = ±1");

  // Leading order. beta2 carries an overall factor g2, so the root set
  // splits into the axis branch g2 = 0 with -a1 + (5/3) a1^2 = 0 and the
  // line branch with the second factor vanishing, where
  // a2 = (2/3)(1 - 2 a1) and 4 omega a1^2 - 4 omega a1 - k^2 = 0.
  struct Lead {
    F a1, a2;
  };
  std::vector<Lead> leads;
  leads.push_back({r(0), r(0)});
  leads.push_back({r(3, 5), r(0)});
  {
    const F disc = r(16) * omega;  // (4 omega)^2 + 4 (4 omega) k^2 collapses exactly
    const F sq = exact_sqrt_or_throw(disc);
    const F denom = r(8) * omega;
    const F a1_minus = (r(4) * omega - sq) / denom;
    const F a1_plus = (r(4) * omega + sq) / denom;
    for (const F& a1 : {a1_minus, a1_plus})
      leads.push_back({a1, r(2, 3) * (one - r(2) * a1)});
  }

  const F s_principal = one / exact_sqrt_or_throw(omega);
  auto classify_lead = [&](const Lead& ld) -> std::pair<FPKind, Branch> {
    if (ST::is_zero(ld.a2))
      return {ST::is_zero(ld.a1) ? FPKind::gaussian : FPKind::heisenberg, Branch::principal};
    const F ising_a1 = (one - s_principal) / r(2);
    const F cubic_a1 = (one + s_principal) / r(2);
    if (ST::abs(ld.a1 - ising_a1) <= 1e-9 * (1.0 + ST::abs(ld.a1)))
      return {FPKind::ising_line, Branch::principal};
    if (ST::abs(ld.a1 - cubic_a1) <= 1e-9 * (1.0 + ST::abs(ld.a1)))
      return {FPKind::cubic_line, Branch::principal};
    return {FPKind::numeric_other, Branch::principal};
  };

  std::vector<FixedPointT<F>> out;
  for (const Lead& ld : leads) {
    F b1 = r(0), b2 = r(0);
    if (order >= 2) {
      // (DQ(a) - I) b = -C(a), with Q the one-loop and C the two-loop part
      // of the reduced system.
      const F a1 = ld.a1, a2 = ld.a2;
      const F m00 = r(10, 3) * a1 + a2 - one;
      const F m01 = a1 - r(3, 8) * k2 * a2;
      const F m10 = r(2) * a2;
      const F m11 = r(3) * a2 + r(2) * a1 - one;
      const F c1 = -(r(5, 3) * a1 * a1 * a1) - r(11, 6) * a1 * a1 * a2 +
                   (r(23, 48) * k2 - r(5, 12)) * a1 * a2 * a2 + r(3, 8) * k2 * a2 * a2 * a2;
      const F c2 = -((r(1, 48) * k2 + r(17, 12)) * a2 * a2 * a2) - r(23, 9) * a1 * a1 * a2 -
                   r(23, 6) * a1 * a2 * a2;
      const F det = m00 * m11 - m01 * m10;
      if (ST::abs(det) <= 1e-12 * (1.0 + ST::abs(m00) + ST::abs(m11)))
        throw std::domain_error(
            "degenerate root pair: leading-order Jacobian singular (k near an exceptional point)");
      b1 = (-c1 * m11 + c2 * m01) / det;
      b2 = (-m00 * c2 + m10 * c1) / det;
    }
    FixedPointT<F> fp;
    auto [kind, branch] = classify_lead(ld);
    fp.kind = kind;
    fp.branch = branch;
    fp.k = k;
    fp.coords[0] = series_from(order, ld.a1, b1);
    fp.coords[1] = series_from(order, ld.a2, b2);
    fp.coords[2] = k * fp.coords[1];
    out.push_back(fp);
  }
  return out;
}

template std::vector<FixedPointT<ExactScalar>> known_fixed_points(const ExactScalar&, int);
template std::vector<FixedPointT<Complex>> known_fixed_points(const Complex&, int);
template std::vector<FixedPointT<ExactScalar>> solve_series(const ExactScalar&, int);
template std::vector<FixedPointT<Complex>> solve_series(const Complex&, int);

namespace {

// Solves A x = b for small dense systems by Gaussian elimination with
// partial pivoting. Returns false on a (numerically) singular pivot.
template <int N>
bool solve_linear(std::array<std::array<Complex, N>, N> a, std::array<Complex, N> b,
                  std::array<Complex, N>& x) {
  for (int col = 0; col < N; ++col) {
    int piv = col;
    for (int row = col + 1; row < N; ++row)
      if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
    if (std::abs(a[piv][col]) < 1e-300) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int row = col + 1; row < N; ++row) {
      const Complex f = a[row][col] / a[col][col];
      for (int cc = col; cc < N; ++cc) a[row][cc] -= f * a[col][cc];
      b[row] -= f * b[col];
    }
  }
  for (int row = N - 1; row >= 0; --row) {
    Complex acc = b[row];
    for (int cc = row + 1; cc < N; ++cc) acc -= a[row][cc] * x[cc];
    x[row] = acc / a[row][row];
  }
  return true;
}

}  // namespace

RefineResult refine_numeric(const CouplingVec& seed, const Complex& eps, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("refine_numeric: tol must be positive");
  constexpr int kMaxIter = 200;
  RefineResult res;
  res.g = seed;

  const bool reduced = std::abs(seed.g2) > 1e-12;
  const Complex k = reduced ? seed.g3 / seed.g2 : Complex(0);

  auto residual = [&](const CouplingVec& g) { return beta_norm(g, eps); };

  CouplingVec g = seed;
  double rnorm = residual(g);
  for (res.iterations = 0; res.iterations < kMaxIter; ++res.iterations) {
    if (rnorm < tol) {
      res.converged = true;
      break;
    }
    const Matrix3 j = jacobian(g, eps);
    const CouplingVec b = beta_full(g, eps);
    CouplingVec step;
    if (reduced) {
      std::array<std::array<Complex, 2>, 2> a{
          {{j(0, 0), j(0, 1) + k * j(0, 2)}, {j(1, 0), j(1, 1) + k * j(1, 2)}}};
      std::array<Complex, 2> rhs{-b.g1, -b.g2}, x{};
      if (!solve_linear<2>(a, rhs, x)) {
        res.message = "jacobian singular in the reduced system";
        break;
      }
      step = {x[0], x[1], k * x[1]};
    } else {
      std::array<std::array<Complex, 3>, 3> a{
          {{j(0, 0), j(0, 1), j(0, 2)}, {j(1, 0), j(1, 1), j(1, 2)}, {j(2, 0), j(2, 1), j(2, 2)}}};
      std::array<Complex, 3> rhs{-b.g1, -b.g2, -b.g3}, x{};
      if (!solve_linear<3>(a, rhs, x)) {
        res.message = "jacobian singular";
        break;
      }
      step = {x[0], x[1], x[2]};
    }
    // damping 0.5 while the residual grows
    double factor = 1.0;
    CouplingVec trial = g + step;
    double tnorm = residual(trial);
    int halvings = 0;
    while (tnorm > rnorm && halvings < 40) {
      factor *= 0.5;
      trial = g + factor * step;
      tnorm = residual(trial);
      ++halvings;
    }
    if (halvings == 40 && tnorm > rnorm) {
      res.message = "newton stalled: residual refuses to decrease";
      break;
    }
    g = trial;
    rnorm = tnorm;
  }
  if (!res.converged && res.message.empty())
    res.message = "no convergence after 200 iterations";
  res.g = g;
  res.residual = rnorm;
  return res;
}

CouplingVec eval_coords(const FixedPoint& fp, const Complex& eps) {
  return {fp.coords[0].eval(eps), fp.coords[1].eval(eps), fp.coords[2].eval(eps)};
}

FixedPoint to_numeric(const ExactFixedPoint& fp) {
  FixedPoint out;
  out.kind = fp.kind;
  out.k = fp.k.to_complex();
  out.branch = fp.branch;
  for (int c = 0; c < 3; ++c) out.coords[c] = to_complex_series(fp.coords[c]);
  return out;
}

}  // namespace ptrg
