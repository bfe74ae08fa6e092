#include "ptrg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptrg {

Complex trace(const Matrix3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

Complex sigma2(const Matrix3& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
         m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
}

Complex det(const Matrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::array<Complex, 3> cubic_roots(const Complex& a, const Complex& b, const Complex& c) {
  // depressed form: x = t - a/3, t^3 + p t + q = 0
  const Complex p = b - a * a / 3.0;
  const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  std::array<Complex, 3> roots;
  const double scale = std::max({std::abs(p), std::abs(q), 1e-300});
  if (std::abs(p) < 1e-14 * scale && std::abs(q) < 1e-14 * scale * scale) {
    roots = {Complex(0), Complex(0), Complex(0)};
  } else {
    const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = -q / 2.0 + disc;
    if (std::abs(u3) < std::abs(-q / 2.0 - disc)) u3 = -q / 2.0 - disc;
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex v = (std::abs(u) > 0) ? -p / (3.0 * u) : Complex(0);
    const Complex w1(-0.5, std::sqrt(3.0) / 2.0);
    const Complex w2(-0.5, -std::sqrt(3.0) / 2.0);
    roots = {u + v, w1 * u + w2 * v, w2 * u + w1 * v};
  }
  for (Complex& t : roots) {
    Complex x = t - a / 3.0;
    for (int it = 0; it < 2; ++it) {  // Newton polish on the original cubic
      const Complex f = ((x + a) * x + b) * x + c;
      const Complex df = (3.0 * x + 2.0 * a) * x + b;
      if (std::abs(df) < 1e-14) break;
      x -= f / df;
    }
    t = x;
  }

  // A nearly coincident pair is re-anchored on the derivative root, where a
  // double root is a well-conditioned simple zero; the remaining root then
  // follows exactly from the coefficient sum.
  double rscale = 1.0;
  for (const Complex& t : roots) rscale = std::max(rscale, std::abs(t));
  int pi = 0, pj = 1;
  double gap = 1e300;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(roots[i] - roots[j]) < gap) {
        gap = std::abs(roots[i] - roots[j]);
        pi = i;
        pj = j;
      }
  if (gap < 1e-5 * rscale) {
    auto pval = [&](const Complex& x) { return ((x + a) * x + b) * x + c; };
    const Complex disc = std::sqrt(a * a - 3.0 * b);
    const Complex d1 = (-a + disc) / 3.0, d2 = (-a - disc) / 3.0;
    const Complex dbl = std::abs(pval(d1)) < std::abs(pval(d2)) ? d1 : d2;
    const double cur = std::max(std::abs(pval(roots[pi])), std::abs(pval(roots[pj])));
    if (std::abs(pval(dbl)) <= std::max(cur, 1e-13 * rscale * rscale * rscale))
      roots = {-a - 2.0 * dbl, dbl, dbl};
  }
  return roots;
}

std::array<Complex, 3> eigen3(const Matrix3& m) {
  // Triangular up to a symmetric permutation: exact eigenvalues on the
  // diagonal. The Jacobian is exactly triangular on the coupling axes,
  // where the spectrum is degenerate.
  double scale = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(m(i, j)));
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    bool lower_zero = true;
    for (int i = 0; i < 3 && lower_zero; ++i)
      for (int j = 0; j < i; ++j)
        if (std::abs(m(p[i], p[j])) > 1e-14 * scale) {
          lower_zero = false;
          break;
        }
    if (lower_zero) return {m(p[0], p[0]), m(p[1], p[1]), m(p[2], p[2])};
  }
  // char poly: lambda^3 - tr lambda^2 + sigma2 lambda - det
  return cubic_roots(-trace(m), sigma2(m), -det(m));
}

std::optional<std::array<Complex, 3>> eigenvector(const Matrix3& m, const Complex& lambda) {
  std::array<std::array<Complex, 3>, 3> r;
  double scale = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = m(i, j) - (i == j ? lambda : Complex(0));
      scale = std::max(scale, std::abs(r[i][j]));
    }
  auto cross = [](const std::array<Complex, 3>& u, const std::array<Complex, 3>& v) {
    return std::array<Complex, 3>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]};
  };
  std::array<Complex, 3> best{};
  double best_norm = 0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    const auto c = cross(r[pr[0]], r[pr[1]]);
    const double nn = std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]);
    if (nn > best_norm) {
      best_norm = nn;
      best = c;
    }
  }
  if (best_norm <= 1e-8 * (1.0 + scale * scale)) return std::nullopt;
  double nrm = std::sqrt(std::norm(best[0]) + std::norm(best[1]) + std::norm(best[2]));
  for (Complex& x : best) x /= nrm;
  return best;
}

EpsSeries<Complex> series_trace(const SeriesMat3& m) { return m[0][0] + m[1][1] + m[2][2]; }

EpsSeries<Complex> series_sigma2(const SeriesMat3& m) {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
         m[1][1] * m[2][2] - m[1][2] * m[2][1];
}

EpsSeries<Complex> series_det(const SeriesMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

SeriesMat3 lift_order(const SeriesMat3& m, int order) {
  SeriesMat3 out{{{EpsSeries<Complex>(order), EpsSeries<Complex>(order), EpsSeries<Complex>(order)},
                  {EpsSeries<Complex>(order), EpsSeries<Complex>(order), EpsSeries<Complex>(order)},
                  {EpsSeries<Complex>(order), EpsSeries<Complex>(order), EpsSeries<Complex>(order)}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int c = 0; c <= std::min(order, m[i][j].order()); ++c) out[i][j][c] = m[i][j][c];
  return out;
}

double matrix_series_scale(const SeriesMat3& m) {
  double s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, m[i][j].max_abs());
  return s;
}

bool series_negligible(const EpsSeries<Complex>& s, double scale) {
  return s.max_abs() <= 1e-12 * (1.0 + scale);
}

}  // namespace

std::array<EpsSeries<Complex>, 3> eigen3_series(const SeriesMat3& m_in) {
  const int order = m_in[0][0].order();
  const double scale = matrix_series_scale(m_in);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(m_in[i][j][0]) > 1e-10 * (1.0 + scale))
        throw std::domain_error("eigen3_series: matrix must vanish at eps = 0");

  auto truncate_all = [&](std::array<EpsSeries<Complex>, 3> v) {
    for (auto& s : v) s = s.truncated(order);
    return v;
  };

  // Triangular up to a symmetric index permutation: eigenvalues sit on the
  // diagonal. Covers the Gaussian and Heisenberg points exactly.
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    bool lower_zero = true;
    for (int i = 0; i < 3 && lower_zero; ++i)
      for (int j = 0; j < i; ++j)
        if (!series_negligible(m_in[p[i]][p[j]], scale)) {
          lower_zero = false;
          break;
        }
    if (lower_zero)
      return truncate_all({m_in[p[0]][p[0]], m_in[p[1]][p[1]], m_in[p[2]][p[2]]});
  }

  // Work at order 4: the det/sigma2 coefficients that feed the order-2
  // eigenvalue correction only involve entry coefficients up to order 2.
  const SeriesMat3 m = lift_order(m_in, std::max(order, 4));
  const auto tr = series_trace(m);
  const auto s2 = series_sigma2(m);
  const auto dt = series_det(m);
  const Complex tr1 = tr[1], tr2 = tr[2];
  const Complex s2_2 = s2[2], s2_3 = s2[3];
  const Complex dt3 = dt[3], dt4 = dt[4];

  auto make_series = [&](const Complex& a, const Complex& b) {
    EpsSeries<Complex> s(order);
    if (order >= 1) s[1] = a;
    if (order >= 2) s[2] = b;
    return s;
  };

  if (series_negligible(dt, scale * scale * scale)) {
    // One exact zero mode; deflated quadratic lambda^2 - tr lambda + sigma2
    // solved order by order: a^2 - tr1 a + s2_2 = 0, b = (tr2 a - s2_3)/(2a - tr1).
    const Complex disc = std::sqrt(tr1 * tr1 - 4.0 * s2_2);
    const Complex a_plus = (tr1 + disc) / 2.0, a_minus = (tr1 - disc) / 2.0;
    if (std::abs(a_plus - a_minus) < 1e-10 * (1.0 + std::abs(tr1)))
      throw std::domain_error("eigen3_series: degenerate deflated pair");
    auto correction = [&](const Complex& a) { return (tr2 * a - s2_3) / (2.0 * a - tr1); };
    return {EpsSeries<Complex>(order), make_series(a_plus, correction(a_plus)),
            make_series(a_minus, correction(a_minus))};
  }

  // Generic case: leading cubic a^3 - tr1 a^2 + s2_2 a - dt3 = 0, then a
  // linear solve per simple root.
  const auto lead = cubic_roots(-tr1, s2_2, -dt3);
  double sep = 1e300;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) sep = std::min(sep, std::abs(lead[i] - lead[j]));
  if (sep < 1e-8 * (1.0 + std::abs(tr1)))
    throw std::domain_error("eigen3_series: repeated leading eigenvalue in non-triangular matrix");
  std::array<EpsSeries<Complex>, 3> out{EpsSeries<Complex>(order), EpsSeries<Complex>(order),
                                        EpsSeries<Complex>(order)};
  for (int r = 0; r < 3; ++r) {
    const Complex a = lead[r];
    const Complex dP = -3.0 * a * a + 2.0 * tr1 * a - s2_2;
    const Complex rhs = tr2 * a * a - s2_3 * a + dt4;
    out[r] = make_series(a, -rhs / dP);
  }
  return out;
}

}  // namespace ptrg
