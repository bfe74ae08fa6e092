#include "ptrg/beta.hpp"

#include <stdexcept>

namespace ptrg {

namespace {

struct TermSpec {
  int e_eps, e1, e2, e3;
  long num, den;
};

CouplingPoly from_terms(std::initializer_list<TermSpec> terms) {
  CouplingPoly p;
  for (const auto& t : terms)
    p += CouplingPoly::term(t.e_eps, t.e1, t.e2, t.e3, ExactScalar(rat(t.num, t.den)));
  return p;
}

}  // namespace

const std::array<CouplingPoly, 3>& beta_polys() {
  static const std::array<CouplingPoly, 3> polys = {
      from_terms({{1, 1, 0, 0, -1, 1},
                  {0, 2, 0, 0, 5, 3},
                  {0, 1, 1, 0, 1, 1},
                  {0, 0, 0, 2, -3, 16},
                  {0, 3, 0, 0, -5, 3},
                  {0, 2, 1, 0, -11, 6},
                  {0, 1, 2, 0, -5, 12},
                  {0, 1, 0, 2, 23, 48},
                  {0, 0, 1, 2, 3, 8}}),
      from_terms({{1, 0, 1, 0, -1, 1},
                  {0, 0, 2, 0, 3, 2},
                  {0, 1, 1, 0, 2, 1},
                  {0, 0, 3, 0, -17, 12},
                  {0, 2, 1, 0, -23, 9},
                  {0, 1, 2, 0, -23, 6},
                  {0, 0, 1, 2, -1, 48}}),
      from_terms({{1, 0, 0, 1, -1, 1},
                  {0, 0, 1, 1, 3, 2},
                  {0, 1, 0, 1, 2, 1},
                  {0, 0, 0, 3, -1, 48},
                  {0, 2, 0, 1, -23, 9},
                  {0, 0, 2, 1, -17, 12},
                  {0, 1, 1, 1, -23, 6}})};
  return polys;
}

const CouplingPoly& beta_poly(int alpha) {
  if (alpha < 1 || alpha > 3) throw std::invalid_argument("beta_poly: alpha must be 1..3");
  return beta_polys()[alpha - 1];
}

const CouplingPoly& eta_poly() {
  static const CouplingPoly p = from_terms(
      {{0, 2, 0, 0, 1, 18}, {0, 0, 2, 0, 1, 24}, {0, 1, 1, 0, 1, 12}, {0, 0, 0, 2, -1, 96}});
  return p;
}

const CouplingPoly& eta2_poly() {
  static const CouplingPoly p = from_terms({{0, 1, 0, 0, -2, 3},
                                            {0, 0, 1, 0, -1, 2},
                                            {0, 2, 0, 0, 5, 18},
                                            {0, 0, 2, 0, 5, 24},
                                            {0, 1, 1, 0, 5, 12},
                                            {0, 0, 0, 2, -5, 96}});
  return p;
}

const CouplingPoly& line_factor_poly() {
  static const CouplingPoly p = from_terms({{1, 0, 0, 0, -1, 1},
                                            {0, 0, 1, 0, 3, 2},
                                            {0, 1, 0, 0, 2, 1},
                                            {0, 0, 2, 0, -17, 12},
                                            {0, 2, 0, 0, -23, 9},
                                            {0, 1, 1, 0, -23, 6},
                                            {0, 0, 0, 2, -1, 48}});
  return p;
}

const std::array<std::array<CouplingPoly, 3>, 3>& jacobian_polys() {
  static const std::array<std::array<CouplingPoly, 3>, 3> polys = [] {
    std::array<std::array<CouplingPoly, 3>, 3> out;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) out[a][b] = beta_polys()[a].partial(b + 1);
    return out;
  }();
  return polys;
}

CouplingVec beta_full(const CouplingVec& g, const Complex& eps) {
  const Complex g1 = g.g1, g2 = g.g2, g3 = g.g3;
  const Complex g1sq = g1 * g1, g2sq = g2 * g2, g3sq = g3 * g3;
  CouplingVec b;
  b.g1 = -eps * g1 + (5.0 / 3.0) * g1sq + g1 * g2 - (3.0 / 16.0) * g3sq - (5.0 / 3.0) * g1sq * g1 -
         (11.0 / 6.0) * g1sq * g2 - (5.0 / 12.0) * g1 * g2sq + (23.0 / 48.0) * g1 * g3sq +
         (3.0 / 8.0) * g2 * g3sq;
  b.g2 = -eps * g2 + 1.5 * g2sq + 2.0 * g1 * g2 - (17.0 / 12.0) * g2sq * g2 -
         (23.0 / 9.0) * g1sq * g2 - (23.0 / 6.0) * g1 * g2sq - (1.0 / 48.0) * g2 * g3sq;
  b.g3 = -eps * g3 + 1.5 * g2 * g3 + 2.0 * g1 * g3 - (1.0 / 48.0) * g3sq * g3 -
         (23.0 / 9.0) * g1sq * g3 - (17.0 / 12.0) * g2sq * g3 - (23.0 / 6.0) * g1 * g2 * g3;
  return b;
}

Matrix3 jacobian(const CouplingVec& g, const Complex& eps) {
  const Complex g1 = g.g1, g2 = g.g2, g3 = g.g3;
  Matrix3 j;
  j(0, 0) = -eps + (10.0 / 3.0) * g1 + g2 - 5.0 * g1 * g1 - (11.0 / 3.0) * g1 * g2 -
            (5.0 / 12.0) * g2 * g2 + (23.0 / 48.0) * g3 * g3;
  j(0, 1) = g1 - (11.0 / 6.0) * g1 * g1 - (5.0 / 6.0) * g1 * g2 + (3.0 / 8.0) * g3 * g3;
  j(0, 2) = -(3.0 / 8.0) * g3 + (23.0 / 24.0) * g1 * g3 + (3.0 / 4.0) * g2 * g3;
  j(1, 0) = 2.0 * g2 - (46.0 / 9.0) * g1 * g2 - (23.0 / 6.0) * g2 * g2;
  j(1, 1) = -eps + 3.0 * g2 + 2.0 * g1 - (17.0 / 4.0) * g2 * g2 - (23.0 / 9.0) * g1 * g1 -
            (23.0 / 3.0) * g1 * g2 - (1.0 / 48.0) * g3 * g3;
  j(1, 2) = -(1.0 / 24.0) * g2 * g3;
  j(2, 0) = 2.0 * g3 - (46.0 / 9.0) * g1 * g3 - (23.0 / 6.0) * g2 * g3;
  j(2, 1) = 1.5 * g3 - (17.0 / 6.0) * g2 * g3 - (23.0 / 6.0) * g1 * g3;
  j(2, 2) = -eps + 1.5 * g2 + 2.0 * g1 - (1.0 / 16.0) * g3 * g3 - (23.0 / 9.0) * g1 * g1 -
            (17.0 / 12.0) * g2 * g2 - (23.0 / 6.0) * g1 * g2;
  return j;
}

double beta_norm(const CouplingVec& g, const Complex& eps) {
  return beta_full(g, eps).max_abs();
}

Complex rg_invariant(const CouplingVec& g) {
  if (g.g2 == 0.0) throw std::domain_error("rg invariant undefined at g2 = 0 (Heisenberg axis)");
  return g.g3 / g.g2;
}

}  // namespace ptrg
