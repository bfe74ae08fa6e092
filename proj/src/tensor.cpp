#include "ptrg/tensor.hpp"

namespace ptrg {

namespace {

int kron(int i, int j) { return i == j ? 1 : 0; }

int eps2(int i, int j) {
  if (i == 0 && j == 1) return 1;
  if (i == 1 && j == 0) return -1;
  return 0;
}

}  // namespace

Rank4Tensor<Rational> basis_tensor(BasisKind which, int n) {
  if (which == BasisKind::W && n != 2)
    throw std::domain_error("W tensor requires n = 2");
  Rank4Tensor<Rational> t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          switch (which) {
            case BasisKind::S:
              t.at(i, j, k, l) =
                  rat(kron(i, j) * kron(k, l) + kron(i, k) * kron(j, l) + kron(i, l) * kron(j, k), 3);
              break;
            case BasisKind::F:
              t.at(i, j, k, l) = rat(kron(i, j) * kron(i, k) * kron(i, l));
              break;
            case BasisKind::W:
              t.at(i, j, k, l) = rat(kron(i, j) * kron(i, k) * eps2(i, l) +
                                         kron(i, k) * kron(i, l) * eps2(i, j) +
                                         kron(i, j) * kron(i, l) * eps2(i, k) +
                                         kron(j, k) * kron(j, l) * eps2(j, i),
                                     4);
              break;
          }
        }
  return symmetrize(t);
}

Rank4Tensor<CouplingPoly> assemble_coupling_symbolic() {
  const auto S = basis_tensor(BasisKind::S, 2);
  const auto F = basis_tensor(BasisKind::F, 2);
  const auto W = basis_tensor(BasisKind::W, 2);
  Rank4Tensor<CouplingPoly> t(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          CouplingPoly p;
          p += CouplingPoly::term(0, 1, 0, 0, ExactScalar(S.at(i, j, k, l)));
          p += CouplingPoly::term(0, 0, 1, 0, ExactScalar(F.at(i, j, k, l)));
          p += CouplingPoly::term(0, 0, 0, 1, ExactScalar(Rational(0), W.at(i, j, k, l)));
          t.at(i, j, k, l) = p;
        }
  return t;
}

Rank4Tensor<Complex> assemble_coupling(const Complex& g1, const Complex& g2, const Complex& g3) {
  const auto S = basis_tensor(BasisKind::S, 2);
  const auto F = basis_tensor(BasisKind::F, 2);
  const auto W = basis_tensor(BasisKind::W, 2);
  Rank4Tensor<Complex> t(2);
  const Complex iu(0.0, 1.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          t.at(i, j, k, l) = g1 * to_double(S.at(i, j, k, l)) + g2 * to_double(F.at(i, j, k, l)) +
                             iu * g3 * to_double(W.at(i, j, k, l));
  return t;
}

Rank4Tensor<CouplingPoly> beta_tensor(const Rank4Tensor<CouplingPoly>& g, bool with_eps_term) {
  auto out = beta_tensor_loops(g);
  if (with_eps_term) {
    const auto eps = CouplingPoly::variable(0);
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        for (int k = 0; k < g.n(); ++k)
          for (int l = 0; l < g.n(); ++l)
            out.at(i, j, k, l) -= eps * g.at(i, j, k, l);
  }
  return out;
}

Rank4Tensor<Complex> beta_tensor(const Rank4Tensor<Complex>& g, const Complex& eps) {
  auto out = beta_tensor_loops(g);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      for (int k = 0; k < g.n(); ++k)
        for (int l = 0; l < g.n(); ++l)
          out.at(i, j, k, l) = out.at(i, j, k, l) - eps * g.at(i, j, k, l);
  return out;
}

namespace {

// sum_{klm} g_{iklm} g_{jklm}, checked proportional to the identity.
CouplingPoly quadratic_identity_contraction(const Rank4Tensor<CouplingPoly>& g) {
  if (g.n() != 2) throw std::domain_error("contraction requires n = 2");
  if (!is_fully_symmetric(g)) throw std::domain_error("contraction: input not fully symmetric");
  std::array<std::array<CouplingPoly, 2>, 2> e{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CouplingPoly acc;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int m = 0; m < 2; ++m) acc += g.at(i, k, l, m) * g.at(j, k, l, m);
      e[i][j] = acc;
    }
  if (!e[0][1].is_zero() || !e[1][0].is_zero() || !(e[0][0] == e[1][1]))
    throw std::domain_error("contraction not proportional to the identity: O(2) index structure broken");
  return e[0][0];
}

}  // namespace

CouplingPoly eta_tensor(const Rank4Tensor<CouplingPoly>& g) {
  return ExactScalar(rat(1, 24)) * quadratic_identity_contraction(g);
}

CouplingPoly eta2_tensor(const Rank4Tensor<CouplingPoly>& g) {
  if (g.n() != 2) throw std::domain_error("contraction requires n = 2");
  if (!is_fully_symmetric(g)) throw std::domain_error("contraction: input not fully symmetric");
  std::array<std::array<CouplingPoly, 2>, 2> tr{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CouplingPoly acc;
      for (int k = 0; k < 2; ++k) acc += g.at(i, j, k, k);
      tr[i][j] = acc;
    }
  if (!tr[0][1].is_zero() || !tr[1][0].is_zero() || !(tr[0][0] == tr[1][1]))
    throw std::domain_error("contraction not proportional to the identity: O(2) index structure broken");
  return ExactScalar(rat(-1, 2)) * tr[0][0] +
         ExactScalar(rat(5, 24)) * quadratic_identity_contraction(g);
}

namespace {

template <class T, class ScaleI>
BasisProjection<T> project_basis_impl(const Rank4Tensor<T>& t, ScaleI scale_minus_4i) {
  if (t.n() != 2) throw std::domain_error("basis projection requires n = 2");
  BasisProjection<T> out;
  out.p1 = detail::rational_scale(rat(3), t.at(0, 0, 1, 1));
  out.p2 = t.at(0, 0, 0, 0) - out.p1;
  out.p3 = scale_minus_4i(t.at(0, 0, 0, 1));

  const auto S = basis_tensor(BasisKind::S, 2);
  const auto F = basis_tensor(BasisKind::F, 2);
  const auto W = basis_tensor(BasisKind::W, 2);
  const double scale = detail::tensor_scale(t);
  out.residual_zero = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          T rec = detail::rational_scale(S.at(i, j, k, l), out.p1) +
                  detail::rational_scale(F.at(i, j, k, l), out.p2);
          if constexpr (std::is_same_v<T, Complex>) {
            rec += Complex(0.0, to_double(W.at(i, j, k, l))) * out.p3;
          } else {
            rec += ExactScalar(Rational(0), W.at(i, j, k, l)) * out.p3;
          }
          if (!detail::entries_equal(t.at(i, j, k, l), rec, scale)) out.residual_zero = false;
        }
  return out;
}

}  // namespace

BasisProjection<CouplingPoly> project_basis(const Rank4Tensor<CouplingPoly>& t) {
  return project_basis_impl(t, [](const CouplingPoly& p) {
    return ExactScalar(Rational(0), Rational(-4)) * p;
  });
}

BasisProjection<Complex> project_basis(const Rank4Tensor<Complex>& t) {
  return project_basis_impl(t, [](const Complex& p) { return Complex(0.0, -4.0) * p; });
}

}  // namespace ptrg
