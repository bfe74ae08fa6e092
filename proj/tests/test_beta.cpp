#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ptrg/beta.hpp"
#include "ptrg/eigen.hpp"
#include "ptrg/tensor.hpp"
#include "test_util.hpp"

using namespace ptrg;
using testutil::exact_series_of;

TEST_CASE("closed-form beta coefficients") {
  const auto& b1 = beta_poly(1);
  CHECK(b1.coeff(1, 1, 0, 0) == ExactScalar(-1));
  CHECK(b1.coeff(0, 2, 0, 0) == ExactScalar(rat(5, 3)));
  CHECK(b1.coeff(0, 1, 1, 0) == ExactScalar(1));
  CHECK(b1.coeff(0, 0, 0, 2) == ExactScalar(rat(-3, 16)));
  CHECK(b1.coeff(0, 3, 0, 0) == ExactScalar(rat(-5, 3)));
  CHECK(b1.coeff(0, 2, 1, 0) == ExactScalar(rat(-11, 6)));
  CHECK(b1.coeff(0, 1, 2, 0) == ExactScalar(rat(-5, 12)));
  CHECK(b1.coeff(0, 1, 0, 2) == ExactScalar(rat(23, 48)));
  CHECK(b1.coeff(0, 0, 1, 2) == ExactScalar(rat(3, 8)));
  CHECK(b1.terms().size() == 9);

  const auto& b2 = beta_poly(2);
  CHECK(b2.coeff(0, 0, 2, 0) == ExactScalar(rat(3, 2)));
  CHECK(b2.coeff(0, 1, 1, 0) == ExactScalar(2));
  CHECK(b2.coeff(0, 0, 3, 0) == ExactScalar(rat(-17, 12)));
  CHECK(b2.coeff(0, 2, 1, 0) == ExactScalar(rat(-23, 9)));
  CHECK(b2.coeff(0, 1, 2, 0) == ExactScalar(rat(-23, 6)));
  CHECK(b2.coeff(0, 0, 1, 2) == ExactScalar(rat(-1, 48)));
  CHECK(b2.terms().size() == 7);
  CHECK(beta_poly(3).terms().size() == 7);
}

TEST_CASE("hard-coded beta equals the tensor-derived projection, symbolically") {
  const auto pr = project_basis(beta_tensor(assemble_coupling_symbolic(), true));
  REQUIRE(pr.residual_zero);
  CHECK(pr.p1 == beta_poly(1));
  CHECK(pr.p2 == beta_poly(2));
  CHECK(pr.p3 == beta_poly(3));
}

TEST_CASE("beta_full point values") {
  const CouplingVec zero{};
  const auto bz = beta_full(zero, Complex(0.37, 0));
  CHECK(bz.g1 == Complex(0));
  CHECK(bz.g2 == Complex(0));
  CHECK(bz.g3 == Complex(0));

  // Heisenberg series point at eps = 0.1: the residual is the dropped
  // eps^3+ tail, exactly -147393/3125000000, and beta2 = beta3 = 0.
  const double g1 = 3.0 * 0.1 / 5.0 + 9.0 * 0.01 / 25.0;
  const auto b = beta_full({Complex(g1, 0), 0, 0}, Complex(0.1, 0));
  CHECK(b.g1.real() == doctest::Approx(-147393.0 / 3125000000.0).epsilon(1e-12));
  CHECK(b.g2 == Complex(0));
  CHECK(b.g3 == Complex(0));

  // (0, 1, 1) at eps = 0: beta2 = beta3 = 3/2 - 17/12 - 1/48 = 1/16
  const auto c = beta_full({0, Complex(1, 0), Complex(1, 0)}, Complex(0, 0));
  CHECK(c.g2.real() == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(c.g3.real() == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
}

TEST_CASE("beta_full agrees with polynomial evaluation at random complex points") {
  testutil::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const CouplingVec g{rng.complex(), rng.complex(), rng.complex()};
    const Complex eps = rng.complex(0.5);
    const auto b = beta_full(g, eps);
    CHECK(std::abs(b.g1 - beta_poly(1).eval<Complex>(g.as_array(), eps)) < 1e-14);
    CHECK(std::abs(b.g2 - beta_poly(2).eval<Complex>(g.as_array(), eps)) < 1e-14);
    CHECK(std::abs(b.g3 - beta_poly(3).eval<Complex>(g.as_array(), eps)) < 1e-14);
  }
}

TEST_CASE("reduced system is beta_full restricted to g3 = k g2, exactly") {
  testutil::Rng rng(43);
  for (int t = 0; t < 1000; ++t) {
    const ExactScalar g1 = rng.exact(), g2 = rng.exact(), k = rng.exact(), eps = rng.exact();
    const auto red = beta_reduced<ExactScalar>(g1, g2, k, eps);
    const std::array<ExactScalar, 3> g{g1, g2, k * g2};
    CHECK(red[0] == beta_poly(1).eval<ExactScalar>(g, eps));
    CHECK(red[1] == beta_poly(2).eval<ExactScalar>(g, eps));
  }
}

TEST_CASE("reduced system at k = 0 has no g2^3 term in the first component") {
  // beta1(0, g2, k=0) keeps only the -(3k^2/16) g2^2 and (3k^2/8) g2^3
  // pieces, which vanish: the value at (g1=0) must be identically zero.
  const auto b = beta_reduced<ExactScalar>(ExactScalar(0), ExactScalar(rat(7, 3)), ExactScalar(0),
                                           ExactScalar(rat(1, 2)));
  CHECK(b[0].is_zero());
}

TEST_CASE("reduced residual on the k = 0 Ising series point") {
  const double e = 0.1;
  const Complex g2(2 * e / 3 + 34 * e * e / 81, 0);
  const auto b = beta_reduced<Complex>(Complex(0), g2, Complex(0), Complex(e, 0));
  CHECK(std::abs(b[0]) == 0.0);
  CHECK(std::abs(b[1]) < 1e-4);  // dropped eps^3 tail
  // identity: beta2 = g2 * X
  const auto x = line_factor_poly().eval<Complex>({Complex(0), g2, Complex(0)}, Complex(e, 0));
  CHECK(std::abs(b[1] - g2 * x) < 1e-18);
}

TEST_CASE("any input with g2 = 0 gives reduced beta2 = 0") {
  testutil::Rng rng(47);
  for (int t = 0; t < 50; ++t) {
    const auto b =
        beta_reduced<ExactScalar>(rng.exact(), ExactScalar(0), rng.exact(), rng.exact());
    CHECK(b[1].is_zero());
  }
}

TEST_CASE("the common line factor divides beta2 and beta3") {
  const auto x2 = beta_poly(2).divided_by_variable(2);
  const auto x3 = beta_poly(3).divided_by_variable(3);
  REQUIRE(x2.has_value());
  REQUIRE(x3.has_value());
  CHECK(*x2 == *x3);
  CHECK(*x2 == line_factor_poly());
  // the exact identity behind the RG invariant
  const auto g2 = CouplingPoly::variable(2), g3 = CouplingPoly::variable(3);
  CHECK((beta_poly(2) * g3 - beta_poly(3) * g2).is_zero());
}

TEST_CASE("beta1 series vanishes through eps^2 on the Heisenberg point") {
  const auto heis = exact_series_of({rat(0), rat(3, 5), rat(9, 25)});
  const EpsSeries<ExactScalar> zero(2);
  CHECK(beta_poly(1).eval_series<ExactScalar>({heis, zero, zero}).is_zero());
  CHECK(beta_poly(2).eval_series<ExactScalar>({heis, zero, zero}).is_zero());
  CHECK(beta_poly(3).eval_series<ExactScalar>({heis, zero, zero}).is_zero());
}

TEST_CASE("partial of beta3 along g3, restricted to the g3 = 0 plane") {
  const CouplingPoly d3 = beta_poly(3).partial(3);
  CouplingPoly restricted;
  for (const auto& [m, c] : d3.terms())
    if (m.e[3] == 0) restricted.add_term(m, c);
  const auto expect = CouplingPoly::term(1, 0, 0, 0, ExactScalar(-1)) +
                      CouplingPoly::term(0, 0, 1, 0, ExactScalar(rat(3, 2))) +
                      CouplingPoly::term(0, 1, 0, 0, ExactScalar(2)) +
                      CouplingPoly::term(0, 2, 0, 0, ExactScalar(rat(-23, 9))) +
                      CouplingPoly::term(0, 0, 2, 0, ExactScalar(rat(-17, 12))) +
                      CouplingPoly::term(0, 1, 1, 0, ExactScalar(rat(-23, 6)));
  CHECK(restricted == expect);
}

TEST_CASE("jacobian at the origin is -eps times the identity") {
  const auto j = jacobian({}, Complex(0.7, 0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(j(a, b) == (a == b ? Complex(-0.7, 0) : Complex(0)));
}

TEST_CASE("one-loop Heisenberg jacobian has eigenvalues {eps, eps/5, eps/5}") {
  // drop the two-loop (total degree 3) monomials, differentiate, evaluate
  const double e = 0.4;
  Matrix3 j;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CouplingPoly one_loop;
      for (const auto& [m, c] : beta_poly(a + 1).terms())
        if (m.e[1] + m.e[2] + m.e[3] <= 2) one_loop.add_term(m, c);
      j(a, b) = one_loop.partial(b + 1).eval<Complex>({Complex(3 * e / 5, 0), 0, 0}, Complex(e, 0));
    }
  auto eig = eigen3(j);
  std::sort(eig.begin(), eig.end(),
            [](const Complex& a, const Complex& b) { return a.real() > b.real(); });
  CHECK(std::abs(eig[0] - Complex(e, 0)) < 1e-12);
  CHECK(std::abs(eig[1] - Complex(e / 5, 0)) < 1e-12);
  CHECK(std::abs(eig[2] - Complex(e / 5, 0)) < 1e-12);
}

TEST_CASE("jacobian matches the symbolic partials exactly") {
  testutil::Rng rng(53);
  const auto& jp = jacobian_polys();
  for (int t = 0; t < 50; ++t) {
    const CouplingVec g{rng.complex(), rng.complex(), rng.complex()};
    const Complex eps = rng.complex(0.5);
    const auto j = jacobian(g, eps);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(std::abs(j(a, b) - jp[a][b].eval<Complex>(g.as_array(), eps)) < 1e-14);
  }
}

TEST_CASE("jacobian columns match central finite differences") {
  testutil::Rng rng(59);
  const double h = 1e-6;
  for (int t = 0; t < 100; ++t) {
    const CouplingVec g{rng.complex(), rng.complex(), rng.complex()};
    const Complex eps(rng.real(0, 1), 0);
    const auto j = jacobian(g, eps);
    for (int col = 0; col < 3; ++col) {
      CouplingVec gp = g, gm = g;
      auto bump = [&](CouplingVec& v, double d) {
        if (col == 0) v.g1 += d;
        if (col == 1) v.g2 += d;
        if (col == 2) v.g3 += d;
      };
      bump(gp, h);
      bump(gm, -h);
      const auto bp = beta_full(gp, eps), bm = beta_full(gm, eps);
      const std::array<Complex, 3> fd{(bp.g1 - bm.g1) / (2 * h), (bp.g2 - bm.g2) / (2 * h),
                                      (bp.g3 - bm.g3) / (2 * h)};
      for (int row = 0; row < 3; ++row) {
        const double scale = std::max(1.0, std::abs(j(row, col)));
        CHECK(std::abs(j(row, col) - fd[row]) / scale < 1e-8);
      }
    }
  }
}

TEST_CASE("rg invariant") {
  CHECK(rg_invariant({Complex(1, 0), Complex(2, 0), Complex(1, 0)}) == Complex(0.5, 0));
  CHECK(std::abs(rg_invariant({Complex(0.3, 0), Complex(0.2, 0), Complex(0.3, 0)}) -
                 Complex(1.5, 0)) < 1e-15);
  CHECK_THROWS_AS(rg_invariant({Complex(1, 0), Complex(0, 0), Complex(1, 0)}), std::domain_error);
}
