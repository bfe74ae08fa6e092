#pragma once

#include <array>
#include <optional>

#include "ptrg/beta.hpp"
#include "ptrg/series.hpp"

namespace ptrg {

Complex trace(const Matrix3& m);
Complex sigma2(const Matrix3& m);  // sum of principal 2x2 minors
Complex det(const Matrix3& m);

// Roots of the characteristic cubic det(M - lambda I) by the closed-form
// complex cubic solution, followed by one Newton polish per root.
std::array<Complex, 3> eigen3(const Matrix3& m);

// Null vector of (M - lambda I), via the largest cross product of two rows.
// nullopt when the null space is not one-dimensional to working precision.
std::optional<std::array<Complex, 3>> eigenvector(const Matrix3& m, const Complex& lambda);

// Roots of a monic complex cubic x^3 + a x^2 + b x + c.
std::array<Complex, 3> cubic_roots(const Complex& a, const Complex& b, const Complex& c);

using SeriesMat3 = std::array<std::array<EpsSeries<Complex>, 3>, 3>;

EpsSeries<Complex> series_trace(const SeriesMat3& m);
EpsSeries<Complex> series_sigma2(const SeriesMat3& m);
EpsSeries<Complex> series_det(const SeriesMat3& m);

// Eigenvalues lambda(eps) = a eps + b eps^2 + ... of a matrix whose entries
// vanish at eps = 0, to the input truncation order. Handles matrices that
// are triangular up to a symmetric permutation (eigenvalues on the
// diagonal), matrices with identically vanishing determinant (the fixed-line
// zero mode; remaining pair solved order by order), and the generic case
// with simple leading roots.
std::array<EpsSeries<Complex>, 3> eigen3_series(const SeriesMat3& m);

}  // namespace ptrg
