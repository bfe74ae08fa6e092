#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ptrg/stability.hpp"
#include "test_util.hpp"

using namespace ptrg;

namespace {

const FixedPoint& find_kind(const std::vector<FixedPoint>& fps, FPKind kind,
                            Branch branch = Branch::principal) {
  for (const auto& fp : fps)
    if (fp.kind == kind && fp.branch == branch) return fp;
  throw std::runtime_error("fixed point kind not found");
}

std::array<int, 3> class_counts(const StabilityReport& rep) {
  std::array<int, 3> c{0, 0, 0};  // stable, unstable, marginal
  for (const auto& cl : rep.classes) {
    if (cl == FlowClass::ir_stable) ++c[0];
    if (cl == FlowClass::ir_unstable) ++c[1];
    if (cl == FlowClass::marginal) ++c[2];
  }
  return c;
}

}  // namespace

TEST_CASE("eigen3 on a scalar matrix") {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) m(i, i) = Complex(-1.0, 0);
  const auto eig = eigen3(m);
  for (const auto& l : eig) CHECK(std::abs(l - Complex(-1, 0)) < 1e-12);
}

TEST_CASE("eigen3 invariants on random complex matrices") {
  testutil::Rng rng(97);
  for (int t = 0; t < 100; ++t) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rng.complex();
    const auto eig = eigen3(m);
    const Complex tr = trace(m), dt = det(m);
    CHECK(std::abs(eig[0] + eig[1] + eig[2] - tr) < 1e-10);
    CHECK(std::abs(eig[0] * eig[1] * eig[2] - dt) < 1e-10);
    // characteristic-polynomial residual, normalized by ||M||^3
    double norm = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) norm = std::max(norm, std::abs(m(i, j)));
    for (const auto& l : eig) {
      Matrix3 s = m;
      for (int i = 0; i < 3; ++i) s(i, i) -= l;
      CHECK(std::abs(det(s)) < 1e-10 * std::max(1.0, norm * norm * norm));
    }
  }
}

TEST_CASE("eigenvector solves the eigenproblem") {
  testutil::Rng rng(101);
  for (int t = 0; t < 30; ++t) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = rng.complex();
    const auto eig = eigen3(m);
    const auto v = eigenvector(m, eig[0]);
    REQUIRE(v.has_value());
    for (int i = 0; i < 3; ++i) {
      Complex acc = -eig[0] * (*v)[i];
      for (int j = 0; j < 3; ++j) acc += m(i, j) * (*v)[j];
      CHECK(std::abs(acc) < 1e-8);
    }
  }
}

TEST_CASE("two-loop Heisenberg eigenvalue series") {
  const auto fps = known_fixed_points(Complex(0, 0), 2);
  const auto eigs = stability_eigenvalues_series(find_kind(fps, FPKind::heisenberg));
  // expect {eps - (3/5) eps^2, eps/5 - eps^2/5, eps/5 - eps^2/5}
  int big = 0, small = 0;
  for (const auto& s : eigs) {
    CHECK(std::abs(s[0]) < 1e-14);
    if (std::abs(s[1] - 1.0) < 1e-12) {
      CHECK(std::abs(s[2] + 0.6) < 1e-12);
      ++big;
    } else {
      CHECK(std::abs(s[1] - 0.2) < 1e-12);
      CHECK(std::abs(s[2] + 0.2) < 1e-12);
      ++small;
    }
  }
  CHECK(big == 1);
  CHECK(small == 2);
}

TEST_CASE("gaussian eigenvalue series is -eps, three times") {
  const auto fps = known_fixed_points(Complex(0.3, 0), 2);
  const auto eigs = stability_eigenvalues_series(find_kind(fps, FPKind::gaussian));
  for (const auto& s : eigs) {
    CHECK(std::abs(s[0]) < 1e-14);
    CHECK(std::abs(s[1] + 1.0) < 1e-14);
    CHECK(std::abs(s[2]) < 1e-14);
  }
}

TEST_CASE("line points carry an exact zero mode in series form") {
  for (const double k : {0.0, 0.5, 0.8, 1.5, 3.0}) {
    const auto fps = known_fixed_points(Complex(k, 0), 2);
    for (FPKind kind : {FPKind::ising_line, FPKind::cubic_line}) {
      const auto fp = find_kind(fps, kind);
      const auto m = jacobian_series(fp);
      CHECK(series_det(m).max_abs() < 1e-13);  // rank drop through eps^2
      const auto eigs = stability_eigenvalues_series(fp);
      int exact_zero = 0;
      for (const auto& s : eigs) exact_zero += s.is_zero() || s.max_abs() < 1e-13;
      CHECK(exact_zero == 1);
    }
  }
}

TEST_CASE("Ising line eigenvalue series at k = 0") {
  // diagonal entries of the (block-triangular) series Jacobian:
  // {eps - 17/27 eps^2, -eps/3 + 19/81 eps^2, 0}
  const auto fps = known_fixed_points(Complex(0, 0), 2);
  const auto eigs = stability_eigenvalues_series(find_kind(fps, FPKind::ising_line));
  bool has_plus = false, has_minus = false, has_zero = false;
  for (const auto& s : eigs) {
    if (s.max_abs() < 1e-13) {
      has_zero = true;
    } else if (s[1].real() > 0) {
      CHECK(std::abs(s[1] - 1.0) < 1e-12);
      CHECK(std::abs(s[2] - Complex(-17.0 / 27.0, 0)) < 1e-12);
      has_plus = true;
    } else {
      CHECK(std::abs(s[1] - Complex(-1.0 / 3.0, 0)) < 1e-12);
      CHECK(std::abs(s[2] - Complex(19.0 / 81.0, 0)) < 1e-12);
      has_minus = true;
    }
  }
  CHECK(has_plus);
  CHECK(has_minus);
  CHECK(has_zero);
}

TEST_CASE("generic eigenvalue series against finite-eps spectra") {
  // a dense matrix eps*A + eps^2*B with well-separated leading eigenvalues
  testutil::Rng rng(107);
  for (int t = 0; t < 10; ++t) {
    Matrix3 a, b;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a(i, j) = rng.complex();
        b(i, j) = rng.complex();
      }
    for (int i = 0; i < 3; ++i) a(i, i) += Complex(3.0 * i, 0);  // separate the spectrum
    SeriesMat3 m{{{EpsSeries<Complex>(2), EpsSeries<Complex>(2), EpsSeries<Complex>(2)},
                  {EpsSeries<Complex>(2), EpsSeries<Complex>(2), EpsSeries<Complex>(2)},
                  {EpsSeries<Complex>(2), EpsSeries<Complex>(2), EpsSeries<Complex>(2)}}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m[i][j][1] = a(i, j);
        m[i][j][2] = b(i, j);
      }
    const auto lam = eigen3_series(m);
    // compare against the numeric spectrum at a small concrete eps
    const double h = 1e-4;
    Matrix3 mh;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mh(i, j) = h * a(i, j) + h * h * b(i, j);
    auto exact = eigen3(mh);
    for (const auto& s : lam) {
      const Complex approx = s.eval(Complex(h, 0));
      double best = 1e300;
      for (const auto& e : exact) best = std::min(best, std::abs(e - approx));
      CHECK(best < 20 * h * h * h);  // eps^3 truncation error
    }
  }
}

TEST_CASE("classification examples at small eps") {
  const Complex e(0.3, 0);
  const auto fps = known_fixed_points(Complex(0, 0), 2);

  const auto gauss = classify(find_kind(fps, FPKind::gaussian), Complex(0.5, 0));
  CHECK(class_counts(gauss) == std::array<int, 3>{0, 3, 0});

  const auto heis = classify(find_kind(fps, FPKind::heisenberg), e);
  CHECK(class_counts(heis) == std::array<int, 3>{3, 0, 0});
  CHECK(heis.refined);

  const auto ising = classify(find_kind(fps, FPKind::ising_line), e);
  CHECK(class_counts(ising) == std::array<int, 3>{1, 1, 1});
  CHECK(ising.refined);
  CHECK(ising.line_zero_mode);
  // the stable direction is the g2 axis at k = 0
  for (int i = 0; i < 3; ++i)
    if (ising.classes[i] == FlowClass::ir_stable) {
      REQUIRE(ising.axis_alignment[i].has_value());
      CHECK(*ising.axis_alignment[i] == 1);
    }

  const auto cubic = classify(find_kind(fps, FPKind::cubic_line), e);
  CHECK(class_counts(cubic) == std::array<int, 3>{1, 1, 1});
  for (int i = 0; i < 3; ++i)
    if (cubic.classes[i] == FlowClass::ir_stable) {
      REQUIRE(cubic.axis_alignment[i].has_value());
      CHECK(*cubic.axis_alignment[i] == 0);
    }
}

TEST_CASE("beyond the real-root window the series point is classified unrefined") {
  // at eps = 0.5 the truncated system has no real Heisenberg root; the
  // series point itself is then not a zero of beta and picks up negative
  // directions (the small-eps pattern does not survive).
  const auto fps = known_fixed_points(Complex(0, 0), 2);
  const auto rep = classify(find_kind(fps, FPKind::heisenberg), Complex(0.5, 0));
  CHECK(!rep.refined);
  CHECK(rep.residual > 1e-6);
  CHECK(class_counts(rep) != std::array<int, 3>{3, 0, 0});
}

TEST_CASE("trace and determinant match eigenvalue sums at refined line points") {
  for (const double k : {0.0, 0.8, 1.5}) {
    const auto fps = known_fixed_points(Complex(k, 0), 2);
    const auto rep = classify(find_kind(fps, FPKind::ising_line), Complex(0.1, 0));
    const auto j = jacobian(rep.point, Complex(0.1, 0));
    const Complex sum = rep.eigenvalues[0] + rep.eigenvalues[1] + rep.eigenvalues[2];
    const Complex prod = rep.eigenvalues[0] * rep.eigenvalues[1] * rep.eigenvalues[2];
    CHECK(std::abs(sum - trace(j)) < 1e-10);
    CHECK(std::abs(prod - det(j)) < 1e-10);
  }
}

TEST_CASE("numeric zero mode at refined line points, both phases") {
  testutil::Rng rng(103);
  for (int t = 0; t < 10; ++t) {
    const double k = (t % 2 == 0) ? rng.real(-0.9, 0.9) : rng.real(1.1, 3.0);
    const auto fps = known_fixed_points(Complex(k, 0), 2);
    for (FPKind kind : {FPKind::ising_line, FPKind::cubic_line}) {
      const auto rep = classify(find_kind(fps, kind), Complex(0.1, 0));
      REQUIRE(rep.refined);
      double min_abs = 1e300;
      for (const auto& l : rep.eigenvalues) min_abs = std::min(min_abs, std::abs(l));
      CHECK(min_abs < 1e-9);
      CHECK(rep.line_zero_mode);
    }
  }
}

TEST_CASE("classification pattern is identical across the PT phases at small eps") {
  const Complex e(0.1, 0);
  std::array<int, 3> ising_ref{}, cubic_ref{};
  bool first = true;
  for (const double k : {0.0, 0.4, 0.8, 1.5, 2.5}) {
    const auto fps = known_fixed_points(Complex(k, 0), 2);
    const auto ising = class_counts(classify(find_kind(fps, FPKind::ising_line), e));
    const auto cubic = class_counts(classify(find_kind(fps, FPKind::cubic_line), e));
    if (first) {
      ising_ref = ising;
      cubic_ref = cubic;
      first = false;
    }
    CHECK(ising == ising_ref);
    CHECK(cubic == cubic_ref);
  }
}

TEST_CASE("eigenvalues are real at real fixed points and conjugate across branches") {
  const Complex e(0.1, 0);
  const auto unbroken = known_fixed_points(Complex(0.6, 0), 2);
  for (const auto& fp : unbroken) {
    const auto rep = classify(fp, e);
    for (const auto& l : rep.eigenvalues) CHECK(std::abs(l.imag()) < 1e-9);
  }
  const auto broken = known_fixed_points(Complex(2.0, 0), 2);
  for (FPKind kind : {FPKind::ising_line, FPKind::cubic_line}) {
    const auto rp = classify(find_kind(broken, kind, Branch::principal), e);
    const auto rc = classify(find_kind(broken, kind, Branch::conjugate), e);
    // both sorted by descending real part, so conjugates align index-wise
    for (int i = 0; i < 3; ++i)
      CHECK(std::abs(rp.eigenvalues[i] - std::conj(rc.eigenvalues[i])) < 1e-10);
  }
}

TEST_CASE("classify validates the tolerance") {
  const auto fps = known_fixed_points(Complex(0, 0), 2);
  CHECK_THROWS_AS(classify(fps[0], Complex(0.1, 0), -1.0), std::invalid_argument);
}
