#include "isocubic/cubic_form.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace isocubic {

namespace {

// Algebra element whose coordinates are exact polynomials; used to expand
// det A symbolically in one pass shared with the numeric determinant.
struct AlgPoly {
  Algebra alg;
  std::vector<ExactPoly> c;

  explicit AlgPoly(Algebra a) : alg(a), c(algebra_dim(a)) {}
};

AlgPoly poly_mul(const AlgPoly& x, const AlgPoly& y) {
  AlgPoly out(x.alg);
  out.c = alg_detail::mul_coords(x.c, y.c);
  return out;
}

AlgPoly poly_conj(const AlgPoly& x) {
  AlgPoly out(x.alg);
  out.c = alg_detail::conj_coords(x.c);
  return out;
}

// Generic Hermitian determinant over any coordinate arithmetic; Scalar is
// the diagonal/result type, El the off-diagonal algebra element type.
template <class Scalar, class El, class Ops>
Scalar det3_impl(const Scalar& d1, const Scalar& d2, const Scalar& d3, const El& x1,
                 const El& x2, const El& x3, DetMethod method, Ops ops) {
  if (method == DetMethod::Freudenthal) {
    Scalar det = d1 * d2 * d3;
    det -= d1 * ops.norm2(x1);
    det -= d2 * ops.norm2(x2);
    det -= d3 * ops.norm2(x3);
    det += ops.twice(ops.re(ops.mul(ops.mul(x1, x2), x3)));
    return det;
  }
  // Weierstrass sum over S3 with the matrix (A12, A23, A31) = (x3, x1, x2).
  // Each permutation's product follows its cycle from the lowest row index,
  // multiplied left to right; the orientation-reversed 3-cycle is the
  // mirror-bracketed product A13 (A32 A21). That is the reading under which
  // the sum takes real values over the noncommutative algebras (a naive
  // one-sided bracketing of both 3-cycles picks up a commutator or an
  // associator and is not real over H and O). Diagonal entries act as real
  // algebra elements.
  const El c1 = ops.conj(x1), c2 = ops.conj(x2), c3 = ops.conj(x3);
  El acc = ops.zero();
  // identity: A11 A22 A33
  acc = ops.add(acc, ops.scale(d1 * d2 * d3, ops.one()));
  // cycle (1 2 3): (A12 A23) A31
  acc = ops.add(acc, ops.mul(ops.mul(x3, x1), x2));
  // cycle (1 3 2): A13 (A32 A21)
  acc = ops.add(acc, ops.mul(c2, ops.mul(c1, c3)));
  // transpositions: -A13 A31 A22, -(A12 A21) A33, -A11 (A23 A32)
  acc = ops.sub(acc, ops.scale(d2, ops.mul(c2, x2)));
  acc = ops.sub(acc, ops.scale(d3, ops.mul(x3, c3)));
  acc = ops.sub(acc, ops.scale(d1, ops.mul(x1, c1)));
  if (!ops.imag_is_zero(acc)) {
    throw std::logic_error("Weierstrass determinant has nonzero imaginary part");
  }
  return ops.re(acc);
}

struct ExactOps {
  Algebra alg;
  AlgElement zero() const { return AlgElement(alg); }
  AlgElement one() const { return AlgElement::unit(alg, 0); }
  AlgElement mul(const AlgElement& x, const AlgElement& y) const { return x * y; }
  AlgElement add(const AlgElement& x, const AlgElement& y) const { return x + y; }
  AlgElement sub(const AlgElement& x, const AlgElement& y) const { return x - y; }
  AlgElement conj(const AlgElement& x) const { return x.conj(); }
  AlgElement scale(const ScalarQ3& s, const AlgElement& x) const { return s * x; }
  ScalarQ3 norm2(const AlgElement& x) const { return x.norm2(); }
  ScalarQ3 re(const AlgElement& x) const { return x.re(); }
  ScalarQ3 twice(const ScalarQ3& v) const { return ScalarQ3(2) * v; }
  bool imag_is_zero(const AlgElement& x) const {
    for (int k = 1; k < x.dim(); ++k) {
      if (!x.coord(k).is_zero()) return false;
    }
    return true;
  }
};

struct PolyOps {
  Algebra alg;
  AlgPoly zero() const { return AlgPoly(alg); }
  AlgPoly one() const {
    AlgPoly e(alg);
    e.c[0] = ExactPoly::constant(ScalarQ3(1));
    return e;
  }
  AlgPoly mul(const AlgPoly& x, const AlgPoly& y) const { return poly_mul(x, y); }
  AlgPoly add(const AlgPoly& x, const AlgPoly& y) const {
    AlgPoly out(alg);
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = x.c[k] + y.c[k];
    return out;
  }
  AlgPoly sub(const AlgPoly& x, const AlgPoly& y) const {
    AlgPoly out(alg);
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = x.c[k] - y.c[k];
    return out;
  }
  AlgPoly conj(const AlgPoly& x) const { return poly_conj(x); }
  AlgPoly scale(const ExactPoly& s, const AlgPoly& x) const {
    AlgPoly out(alg);
    for (std::size_t k = 0; k < out.c.size(); ++k) out.c[k] = s * x.c[k];
    return out;
  }
  ExactPoly norm2(const AlgPoly& x) const {
    ExactPoly s;
    for (const auto& ck : x.c) s += ck * ck;
    return s;
  }
  ExactPoly re(const AlgPoly& x) const { return x.c[0]; }
  ExactPoly twice(const ExactPoly& v) const { return ScalarQ3(2) * v; }
  bool imag_is_zero(const AlgPoly& x) const {
    for (std::size_t k = 1; k < x.c.size(); ++k) {
      if (!x.c[k].is_zero()) return false;
    }
    return true;
  }
};

// 1-based coordinate index carried by division-algebra unit u of alpha_m
// (m = 1,2,3): the real slots are a_1,a_2,a_3, the i slots a_6,a_7,a_8, the
// j,k slots a_9..a_14 and the p..s slots a_15..a_26.
int alpha_coord_index(int m, int u) {
  if (u == 0) return m;
  if (u == 1) return 5 + m;
  if (u <= 3) return 7 + 2 * m + (u - 2);   // j: 7+2m, k: 8+2m
  return 11 + 4 * m + (u - 4);              // p,q,r,s
}

}  // namespace

Herm3::Herm3(ScalarQ3 d1_, ScalarQ3 d2_, ScalarQ3 d3_, AlgElement x1_, AlgElement x2_,
             AlgElement x3_)
    : d1(std::move(d1_)),
      d2(std::move(d2_)),
      d3(std::move(d3_)),
      x1(std::move(x1_)),
      x2(std::move(x2_)),
      x3(std::move(x3_)) {
  if (x1.algebra() != x2.algebra() || x2.algebra() != x3.algebra()) {
    throw std::invalid_argument("Herm3: off-diagonal entries in different algebras");
  }
  if (!(d1 + d2 + d3).is_zero()) {
    throw std::invalid_argument("Herm3: diagonal is not traceless");
  }
}

PointVecQ::PointVecQ(int n_, std::vector<ScalarQ3> coords) : n(n_), a(std::move(coords)) {
  if (static_cast<int>(a.size()) != n) {
    throw std::invalid_argument("PointVecQ: coordinate count != n");
  }
}

Herm3 build_hermitian(const PointVecQ& pt) {
  const Algebra alg = algebra_for_point_dim(pt.n);
  const int ad = algebra_dim(alg);
  const ScalarQ3 s3 = ScalarQ3::sqrt3();
  auto coord = [&](int one_based) -> const ScalarQ3& { return pt.a[one_based - 1]; };

  std::array<AlgElement, 3> alpha = {AlgElement(alg), AlgElement(alg), AlgElement(alg)};
  for (int m = 1; m <= 3; ++m) {
    for (int u = 0; u < ad; ++u) {
      alpha[m - 1].coord(u) = coord(alpha_coord_index(m, u));
    }
  }
  ScalarQ3 d1 = coord(5) - s3 * coord(4);
  ScalarQ3 d2 = coord(5) + s3 * coord(4);
  ScalarQ3 d3 = ScalarQ3(-2) * coord(5);
  AlgElement x1 = s3 * alpha[0];
  AlgElement x2 = s3 * alpha[1].conj();
  AlgElement x3 = s3 * alpha[2];
  return Herm3(std::move(d1), std::move(d2), std::move(d3), std::move(x1), std::move(x2),
               std::move(x3));
}

ScalarQ3 det3(const Herm3& m, DetMethod method) {
  return det3_impl(m.d1, m.d2, m.d3, m.x1, m.x2, m.x3, method, ExactOps{m.algebra()});
}

ExactPoly cubic_polynomial(int n, DetMethod method) {
  const Algebra alg = algebra_for_point_dim(n);
  const int ad = algebra_dim(alg);
  const ScalarQ3 s3 = ScalarQ3::sqrt3();
  auto var = [](int i) { return ExactPoly::variable(i); };

  std::array<AlgPoly, 3> alpha = {AlgPoly(alg), AlgPoly(alg), AlgPoly(alg)};
  for (int m = 1; m <= 3; ++m) {
    for (int u = 0; u < ad; ++u) {
      alpha[m - 1].c[u] = var(alpha_coord_index(m, u));
    }
  }
  ExactPoly d1 = var(5) - s3 * var(4);
  ExactPoly d2 = var(5) + s3 * var(4);
  ExactPoly d3 = ScalarQ3(-2) * var(5);
  PolyOps ops{alg};
  AlgPoly x1 = ops.scale(ExactPoly::constant(s3), alpha[0]);
  AlgPoly x2 = ops.scale(ExactPoly::constant(s3), poly_conj(alpha[1]));
  AlgPoly x3 = ops.scale(ExactPoly::constant(s3), alpha[2]);
  return det3_impl(d1, d2, d3, x1, x2, x3, method, ops);
}

UpsilonTensor upsilon_from_cubic(int n) {
  if (!is_supported_dim(n)) {
    throw std::invalid_argument("unsupported dimension " + std::to_string(n));
  }
  const ExactPoly w = cubic_polynomial(n);
  UpsilonTensor u;
  u.n = n;
  const ScalarQ3 half = ScalarQ3::rational(1, 2);
  for (const auto& [mono, c] : w.terms()) {
    if (mono.size() != 3) {
      throw std::logic_error("cubic expansion produced a non-cubic monomial");
    }
    std::array<int, 3> ijk = {mono[0], mono[1], mono[2]};
    ScalarQ3 denom(multinomial_count3(ijk));
    u.set(ijk, half * (c / denom));
  }
  return u;
}

}  // namespace isocubic
