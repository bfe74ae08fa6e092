#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ptrg/series.hpp"

namespace ptrg {

// Monomial exponents over (eps, g1, g2, g3). Carrying eps as a fourth slot
// lets the -eps*g terms of the beta functions live in the same polynomial
// ring as the loop contributions.
struct Mono {
  std::array<std::uint8_t, 4> e{0, 0, 0, 0};
  auto operator<=>(const Mono&) const = default;
};

// Sparse multivariate polynomial with exact Gaussian-rational coefficients.
// Zero coefficients are dropped eagerly so equality is structural.
class CouplingPoly {
 public:
  CouplingPoly() = default;

  static CouplingPoly constant(ExactScalar c) {
    CouplingPoly p;
    p.add_term(Mono{}, std::move(c));
    return p;
  }
  // var: 0 = eps, 1..3 = g1..g3
  static CouplingPoly variable(int var) {
    Mono m;
    m.e.at(var) = 1;
    CouplingPoly p;
    p.add_term(m, ExactScalar(1));
    return p;
  }
  static CouplingPoly term(int e_eps, int e1, int e2, int e3, ExactScalar c) {
    Mono m;
    m.e = {static_cast<std::uint8_t>(e_eps), static_cast<std::uint8_t>(e1),
           static_cast<std::uint8_t>(e2), static_cast<std::uint8_t>(e3)};
    CouplingPoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  const std::map<Mono, ExactScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[0] + m.e[1] + m.e[2] + m.e[3]);
    return d;
  }
  ExactScalar coeff(int e_eps, int e1, int e2, int e3) const {
    Mono m;
    m.e = {static_cast<std::uint8_t>(e_eps), static_cast<std::uint8_t>(e1),
           static_cast<std::uint8_t>(e2), static_cast<std::uint8_t>(e3)};
    auto it = terms_.find(m);
    return it == terms_.end() ? ExactScalar() : it->second;
  }

  void add_term(const Mono& m, ExactScalar c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend CouplingPoly operator-(const CouplingPoly& p) {
    CouplingPoly r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend CouplingPoly operator+(const CouplingPoly& a, const CouplingPoly& b) {
    CouplingPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend CouplingPoly operator-(const CouplingPoly& a, const CouplingPoly& b) {
    CouplingPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend CouplingPoly operator*(const CouplingPoly& a, const CouplingPoly& b) {
    CouplingPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Mono m;
        for (int v = 0; v < 4; ++v)
          m.e[v] = static_cast<std::uint8_t>(ma.e[v] + mb.e[v]);
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend CouplingPoly operator*(const ExactScalar& c, const CouplingPoly& p) {
    CouplingPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }
  friend CouplingPoly operator*(const CouplingPoly& p, const ExactScalar& c) { return c * p; }
  CouplingPoly& operator+=(const CouplingPoly& o) { return *this = *this + o; }
  CouplingPoly& operator-=(const CouplingPoly& o) { return *this = *this - o; }
  CouplingPoly& operator*=(const CouplingPoly& o) { return *this = *this * o; }

  friend bool operator==(const CouplingPoly& a, const CouplingPoly& b) {
    return a.terms_ == b.terms_;
  }

  // Formal partial derivative; var as in variable().
  CouplingPoly partial(int var) const {
    CouplingPoly r;
    for (const auto& [m, c] : terms_) {
      const int e = m.e.at(var);
      if (e == 0) continue;
      Mono d = m;
      d.e.at(var) = static_cast<std::uint8_t>(e - 1);
      r.add_term(d, ExactScalar(rat(e)) * c);
    }
    return r;
  }

  // Exact division by a single variable; nullopt when some term lacks it.
  std::optional<CouplingPoly> divided_by_variable(int var) const {
    CouplingPoly r;
    for (const auto& [m, c] : terms_) {
      if (m.e.at(var) == 0) return std::nullopt;
      Mono d = m;
      d.e.at(var) = static_cast<std::uint8_t>(m.e.at(var) - 1);
      r.add_term(d, c);
    }
    return r;
  }

  // Substitutes eps-series for g1..g3 (and the canonical eps series for the
  // eps slot); all arithmetic truncated at the common order.
  template <class C>
  EpsSeries<C> eval_series(const std::array<EpsSeries<C>, 3>& g) const {
    const int order = g[0].order();
    if (g[1].order() != order || g[2].order() != order)
      throw std::invalid_argument("series truncation orders differ");
    const auto es = EpsSeries<C>::eps(order);
    EpsSeries<C> acc(order);
    for (const auto& [m, c] : terms_) {
      auto t = EpsSeries<C>::constant(order, scalar_cast<C>(c));
      t = t * es.pow(m.e[0]);
      for (int v = 0; v < 3; ++v) t = t * g[v].pow(m.e[v + 1]);
      acc += t;
    }
    return acc;
  }

  template <class C>
  C eval(const std::array<C, 3>& g, const C& eps) const {
    auto ipow = [](C base, int e) {
      C r = scalar_traits<C>::from_rat(1);
      for (int t = 0; t < e; ++t) r = r * base;
      return r;
    };
    C acc{};
    for (const auto& [m, c] : terms_) {
      C t = scalar_cast<C>(c) * ipow(eps, m.e[0]);
      for (int v = 0; v < 3; ++v) t = t * ipow(g[v], m.e[v + 1]);
      acc += t;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  std::map<Mono, ExactScalar> terms_;
};

}  // namespace ptrg
