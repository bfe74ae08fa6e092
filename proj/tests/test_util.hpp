#pragma once

#include <random>

#include "ptrg/poly.hpp"

namespace ptrg::testutil {

// Deterministic generators for the property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double real(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Rational rational(long max_num = 20, long max_den = 12) {
    return rat(integer(-max_num, max_num), integer(1, max_den));
  }
  ExactScalar exact() { return {rational(), rational()}; }
  ExactScalar nonzero_exact() {
    for (;;) {
      auto x = exact();
      if (!x.is_zero()) return x;
    }
  }
  Complex complex(double radius = 1.0) { return {real(-radius, radius), real(-radius, radius)}; }

  EpsSeries<ExactScalar> exact_series(int order) {
    EpsSeries<ExactScalar> s(order);
    for (int m = 0; m <= order; ++m) s[m] = exact();
    return s;
  }
  EpsSeries<Complex> complex_series(int order, double radius = 1.0) {
    EpsSeries<Complex> s(order);
    for (int m = 0; m <= order; ++m) s[m] = complex(radius);
    return s;
  }
  CouplingPoly poly(int max_terms = 8, int max_degree = 3) {
    CouplingPoly p;
    const int nt = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < nt; ++t) {
      int budget = max_degree;
      Mono m;
      for (int v = 0; v < 4; ++v) {
        const int e = static_cast<int>(integer(0, budget));
        m.e[v] = static_cast<std::uint8_t>(e);
        budget -= e;
      }
      p.add_term(m, exact());
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

inline EpsSeries<ExactScalar> exact_series_of(std::initializer_list<Rational> coeffs) {
  std::vector<ExactScalar> c;
  for (const auto& r : coeffs) c.emplace_back(r);
  return {static_cast<int>(c.size()) - 1, std::move(c)};
}

}  // namespace ptrg::testutil
