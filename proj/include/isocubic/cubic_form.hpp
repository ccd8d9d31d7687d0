#pragma once

#include "isocubic/division_algebra.hpp"
#include "isocubic/polynomial.hpp"
#include "isocubic/upsilon.hpp"

#include <vector>

namespace isocubic {

/// Hermitian traceless 3x3 matrix over a division algebra, in the
/// convention A = [[d1, x3, conj(x2)], [conj(x3), d2, x1], [x2, conj(x1), d3]].
struct Herm3 {
  ScalarQ3 d1, d2, d3;
  AlgElement x1, x2, x3;

  Herm3(ScalarQ3 d1_, ScalarQ3 d2_, ScalarQ3 d3_, AlgElement x1_, AlgElement x2_,
        AlgElement x3_);
  Algebra algebra() const { return x1.algebra(); }
};

/// Point of R^n, n in {5, 8, 14, 26}, with exact coordinates (1-based in
/// the printed conventions; a[k] holds a_{k+1}).
struct PointVecQ {
  int n = 0;
  std::vector<ScalarQ3> a;

  PointVecQ(int n_, std::vector<ScalarQ3> coords);
};

/// Populate the Hermitian matrix from a point: diagonal
/// (a5 - sqrt3 a4, a5 + sqrt3 a4, -2 a5) and off-diagonal data
/// x1 = sqrt3 alpha1, x2 = sqrt3 conj(alpha2), x3 = sqrt3 alpha3, where the
/// alphas collect the remaining coordinates on the division-algebra units.
Herm3 build_hermitian(const PointVecQ& a);

enum class DetMethod {
  /// d1 d2 d3 - d1 n(x1) - d2 n(x2) - d3 n(x3) + 2 re((x1 x2) x3).
  Freudenthal,
  /// sum over S3 of sgn(pi) A_{1pi(1)} A_{2pi(2)} A_{3pi(3)}, products
  /// bracketed left to right; the imaginary part must cancel.
  WeierstrassLeft,
};

/// Real determinant of the Hermitian matrix. Throws std::logic_error if the
/// Weierstrass sum fails to be real (a broken multiplication table).
ScalarQ3 det3(const Herm3& m, DetMethod method);

/// The cubic w(a) = det A as an exact polynomial in a_1..a_n.
ExactPoly cubic_polynomial(int n, DetMethod method = DetMethod::Freudenthal);

/// Exact symmetric tensor with Y = (1/12) D^3 w, i.e. w = 2 Y_ijk a_i a_j a_k.
/// This normalization makes the quadratic identity hold with the identity
/// metric on the nose.
UpsilonTensor upsilon_from_cubic(int n);

}  // namespace isocubic
