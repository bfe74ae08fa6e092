#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ptrg/poly.hpp"

namespace ptrg {

// Dense fully-symmetric rank-4 tensor over n field components. Dense n^4
// storage: 16 entries at n = 2, symmetry compression is not worth it.
template <class T>
class Rank4Tensor {
 public:
  explicit Rank4Tensor(int n) : n_(n), e_(static_cast<std::size_t>(n) * n * n * n) {
    if (n < 1) throw std::invalid_argument("tensor needs n >= 1");
  }

  int n() const { return n_; }
  T& at(int i, int j, int k, int l) { return e_[idx(i, j, k, l)]; }
  const T& at(int i, int j, int k, int l) const { return e_[idx(i, j, k, l)]; }
  const std::vector<T>& entries() const { return e_; }

  friend Rank4Tensor operator+(const Rank4Tensor& a, const Rank4Tensor& b) {
    Rank4Tensor r = a;
    for (std::size_t p = 0; p < r.e_.size(); ++p) r.e_[p] += b.e_[p];
    return r;
  }
  friend Rank4Tensor operator-(const Rank4Tensor& a, const Rank4Tensor& b) {
    Rank4Tensor r = a;
    for (std::size_t p = 0; p < r.e_.size(); ++p) r.e_[p] = r.e_[p] - b.e_[p];
    return r;
  }

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_;
  std::vector<T> e_;
};

namespace detail {

inline const std::array<std::array<int, 4>, 24>& index_permutations() {
  static const std::array<std::array<int, 4>, 24> perms = [] {
    std::array<std::array<int, 4>, 24> out{};
    std::array<int, 4> p{0, 1, 2, 3};
    int c = 0;
    do {
      out[c++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

inline Rational rational_scale(const Rational& c, const Rational& x) { return Rational(c * x); }
inline Complex rational_scale(const Rational& c, const Complex& x) { return to_double(c) * x; }
inline CouplingPoly rational_scale(const Rational& c, const CouplingPoly& x) {
  return ExactScalar(c) * x;
}

inline bool entries_equal(const Rational& a, const Rational& b, double) { return a == b; }
inline bool entries_equal(const CouplingPoly& a, const CouplingPoly& b, double) { return a == b; }
inline bool entries_equal(const Complex& a, const Complex& b, double scale) {
  return std::abs(a - b) <= 1e-12 * (1.0 + scale);
}

template <class T>
double tensor_scale(const Rank4Tensor<T>&) {
  return 0.0;
}
inline double tensor_scale(const Rank4Tensor<Complex>& t) {
  double m = 0;
  for (const Complex& x : t.entries()) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace detail

template <class T>
Rank4Tensor<T> symmetrize(const Rank4Tensor<T>& t) {
  const int n = t.n();
  Rank4Tensor<T> r(n);
  const auto& perms = detail::index_permutations();
  const Rational w = rat(1, 24);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const std::array<int, 4> ix{i, j, k, l};
          T acc{};
          for (const auto& p : perms)
            acc += t.at(ix[p[0]], ix[p[1]], ix[p[2]], ix[p[3]]);
          r.at(i, j, k, l) = detail::rational_scale(w, acc);
        }
  return r;
}

template <class T>
bool is_fully_symmetric(const Rank4Tensor<T>& t) {
  const int n = t.n();
  const double scale = detail::tensor_scale(t);
  const auto& perms = detail::index_permutations();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const std::array<int, 4> ix{i, j, k, l};
          for (const auto& p : perms)
            if (!detail::entries_equal(t.at(i, j, k, l),
                                       t.at(ix[p[0]], ix[p[1]], ix[p[2]], ix[p[3]]), scale))
              return false;
        }
  return true;
}

enum class BasisKind { S, F, W };

// Closed-form basis tensors. W needs the two-component antisymmetric symbol,
// so it is only defined at n = 2.
Rank4Tensor<Rational> basis_tensor(BasisKind which, int n);

template <class T>
Rank4Tensor<T> tensor_cast(const Rank4Tensor<Rational>& t) {
  Rank4Tensor<T> r(t.n());
  for (int i = 0; i < t.n(); ++i)
    for (int j = 0; j < t.n(); ++j)
      for (int k = 0; k < t.n(); ++k)
        for (int l = 0; l < t.n(); ++l) {
          if constexpr (std::is_same_v<T, Complex>) {
            r.at(i, j, k, l) = Complex(to_double(t.at(i, j, k, l)), 0.0);
          } else if constexpr (std::is_same_v<T, CouplingPoly>) {
            r.at(i, j, k, l) = CouplingPoly::constant(ExactScalar(t.at(i, j, k, l)));
          } else {
            r.at(i, j, k, l) = t.at(i, j, k, l);
          }
        }
  return r;
}

// g_{ijkl} = g1 S + g2 F + i g3 W with symbolic polynomial entries (n = 2).
Rank4Tensor<CouplingPoly> assemble_coupling_symbolic();
// Numeric counterpart at concrete coupling values.
Rank4Tensor<Complex> assemble_coupling(const Complex& g1, const Complex& g2, const Complex& g3);

// Loop contributions to the beta tensor, in units where N_d is absorbed into
// the couplings. Index enumerations, pinned by the requirement that the
// projected components reproduce the closed-form component beta functions:
//   one loop:    (1/2) sum over the 3 pairings of externals onto two
//                vertices: (ij)(kl), (ik)(jl), (il)(jk)
//   two loop A: -(1/4) sum over the 6 choices of the external pair on the
//                double-bubble side vertex
//   two loop B: +(1/48) sum over the 4 choices of the external leg carrying
//                the sunset self-energy insertion
template <class T>
Rank4Tensor<T> beta_tensor_loops(const Rank4Tensor<T>& g) {
  if (!is_fully_symmetric(g)) throw std::domain_error("beta tensor: input not fully symmetric");
  const int n = g.n();

  Rank4Tensor<T> pair(n);  // sum_{mq} g_{abmq} g_{mqcd}
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          T acc{};
          for (int m = 0; m < n; ++m)
            for (int q = 0; q < n; ++q) acc += g.at(a, b, m, q) * g.at(m, q, c, d);
          pair.at(a, b, c, d) = acc;
        }

  Rank4Tensor<T> chain(n);  // indexed (m,c,n,d): sum_{pq} g_{mpqc} g_{npqd}
  for (int m = 0; m < n; ++m)
    for (int c = 0; c < n; ++c)
      for (int nn = 0; nn < n; ++nn)
        for (int d = 0; d < n; ++d) {
          T acc{};
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) acc += g.at(m, p, q, c) * g.at(nn, p, q, d);
          chain.at(m, c, nn, d) = acc;
        }

  std::vector<T> sunset(static_cast<std::size_t>(n) * n);  // sum_{npq} g_{mnpq} g_{npqx}
  for (int m = 0; m < n; ++m)
    for (int x = 0; x < n; ++x) {
      T acc{};
      for (int nn = 0; nn < n; ++nn)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) acc += g.at(m, nn, p, q) * g.at(nn, p, q, x);
      sunset[static_cast<std::size_t>(m) * n + x] = acc;
    }

  Rank4Tensor<T> out(n);
  const Rational half = rat(1, 2), quarter = rat(-1, 4), f48 = rat(1, 48);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          T one{};
          const std::array<std::array<int, 4>, 3> pairings{{{i, j, k, l}, {i, k, j, l}, {i, l, j, k}}};
          for (const auto& p : pairings) one += pair.at(p[0], p[1], p[2], p[3]);

          T dbl{};
          const std::array<std::array<int, 4>, 6> splits{
              {{i, j, k, l}, {i, k, j, l}, {i, l, j, k}, {j, k, i, l}, {j, l, i, k}, {k, l, i, j}}};
          for (const auto& s : splits)
            for (int m = 0; m < n; ++m)
              for (int nn = 0; nn < n; ++nn)
                dbl += g.at(s[0], s[1], m, nn) * chain.at(m, s[2], nn, s[3]);

          T sun{};
          const std::array<std::array<int, 4>, 4> legs{
              {{i, j, k, l}, {i, j, l, k}, {i, k, l, j}, {j, k, l, i}}};
          for (const auto& lg : legs)
            for (int m = 0; m < n; ++m)
              sun += g.at(lg[0], lg[1], lg[2], m) * sunset[static_cast<std::size_t>(m) * n + lg[3]];

          out.at(i, j, k, l) = detail::rational_scale(half, one) +
                               detail::rational_scale(quarter, dbl) +
                               detail::rational_scale(f48, sun);
        }
  return out;
}

// Full beta tensor including the dimensional -eps g term (eps symbolic).
Rank4Tensor<CouplingPoly> beta_tensor(const Rank4Tensor<CouplingPoly>& g, bool with_eps_term = true);
Rank4Tensor<Complex> beta_tensor(const Rank4Tensor<Complex>& g, const Complex& eps);

// Anomalous-dimension contractions (n = 2, symbolic). Both verify the result
// is proportional to the identity and return the scalar polynomial.
CouplingPoly eta_tensor(const Rank4Tensor<CouplingPoly>& g);
CouplingPoly eta2_tensor(const Rank4Tensor<CouplingPoly>& g);

// Coefficients of a tensor along (S, F, iW); residual_zero reports whether
// the reconstruction matches all 16 entries.
template <class T>
struct BasisProjection {
  T p1{}, p2{}, p3{};
  bool residual_zero = false;
};

BasisProjection<CouplingPoly> project_basis(const Rank4Tensor<CouplingPoly>& t);
BasisProjection<Complex> project_basis(const Rank4Tensor<Complex>& t);

}  // namespace ptrg
