#include "isocubic/lie_algebra.hpp"

#include "isocubic/cubic_form.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace isocubic;
using isocubic::testing::random_rotation;

TEST_CASE("so(n) basis") {
  CHECK(so_basis(5).size() == 10);
  CHECK(so_dim(26) == 325);
  auto basis = so_basis(5);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const double pairing = 0.5 * (basis[a].transpose() * basis[b]).trace();
      CHECK(pairing == doctest::Approx(a == b ? 1.0 : 0.0));
    }
  }
  // [E12, E23] = -E13 with E_ab = e_a e_b^T - e_b e_a^T
  Eigen::MatrixXd br = bracket(basis[pair_index(0, 1, 5)], basis[pair_index(1, 2, 5)]);
  Eigen::MatrixXd e13 = basis[pair_index(0, 2, 5)];
  CHECK(std::min((br - e13).norm(), (br + e13).norm()) < 1e-14);
}

TEST_CASE("action on the symmetric cube") {
  UpsilonTensor u = upsilon_from_cubic(5);
  UpsilonFloat uf = UpsilonFloat::from(u);

  Sym3Tensor zero = act_sym3(Eigen::MatrixXd::Zero(5, 5), uf);
  CHECK(zero.is_zero(0.0));

  Subspace h = stabilizer_sym3(u, Mode::Float);
  Eigen::MatrixXd q = h.orthonormal_basis();
  for (int c = 0; c < q.cols(); ++c) {
    CHECK(act_sym3(skew_from_coords(q.col(c), 5), uf).is_zero(1e-12));
  }

  Eigen::MatrixXd e12 = Eigen::MatrixXd::Zero(5, 5);
  e12(0, 1) = 1.0;
  e12(1, 0) = -1.0;
  Sym3Tensor moved = act_sym3(e12, uf);
  CHECK_FALSE(moved.is_zero(1e-12));
  // (E12.Y)_223 = 2 Y_123 = sqrt3; the a1 a2 a4 coefficient of the cubic is
  // zero, so the 224 slot stays empty
  CHECK(moved.get(1, 1, 2) == doctest::Approx(std::sqrt(3.0)));
  CHECK(moved.get(1, 1, 3) == doctest::Approx(0.0));
}

TEST_CASE("stabilizer dimensions, exact and float") {
  for (int n : {5, 8}) {
    UpsilonTensor u = upsilon_from_cubic(n);
    Subspace hq = stabilizer_sym3(u, Mode::Exact);
    Subspace hf = stabilizer_sym3(u, Mode::Float);
    const int expected = n == 5 ? 3 : 8;
    CHECK(hq.dim() == expected);
    CHECK(hf.dim() == expected);
    CHECK(bracket_closure_check(hq, n));
    CHECK(bracket_closure_check(hf, n));
  }
}

TEST_CASE("stabilizer is scaling invariant") {
  UpsilonTensor u = upsilon_from_cubic(5);
  Subspace h1 = stabilizer_sym3(u, Mode::Float);
  Subspace h2 = stabilizer_sym3(u.scaled(ScalarQ3(3)), Mode::Float);
  CHECK(h1.dim() == h2.dim());
  CHECK((h1.projector() - h2.projector()).norm() < 1e-10);
}

TEST_CASE("stabilizer is equivariant under rotation") {
  UpsilonTensor u = upsilon_from_cubic(5);
  UpsilonFloat uf = UpsilonFloat::from(u);
  std::mt19937_64 rng(2024);
  Eigen::MatrixXd r = random_rotation(5, rng);
  UpsilonFloat rotated = rotate_upsilon(uf, r);

  // stabilizer of the rotated tensor = r h r^T
  Subspace h = stabilizer_sym3(u, Mode::Float);
  Eigen::MatrixXd q = h.orthonormal_basis();
  Eigen::MatrixXd conj_basis(q.rows(), q.cols());
  for (int c = 0; c < q.cols(); ++c) {
    conj_basis.col(c) = coords_from_skew(r * skew_from_coords(q.col(c), 5) * r.transpose());
  }
  // assemble stabilizer of rotated tensor by solving the float system again
  // (float path accepts only exact tensors, so act directly)
  Eigen::MatrixXd m(static_cast<int>(symmetric_triples(5).size()), so_dim(5));
  int col = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b, ++col) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(5, 5);
      e(a, b) = 1.0;
      e(b, a) = -1.0;
      Sym3Tensor res = act_sym3(e, rotated);
      int row = 0;
      for (const auto& t : symmetric_triples(5)) {
        m(row++, col) = res.get(t[0], t[1], t[2]);
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  Eigen::MatrixXd null = svd.matrixV().rightCols(3);
  CHECK(svd.singularValues()(so_dim(5) - 4) > 1e-6);  // clean rank drop at 3
  Subspace hr = Subspace::from_float(so_dim(5), null);
  Subspace hc = Subspace::from_float(so_dim(5), conj_basis);
  CHECK((hr.projector() - hc.projector()).norm() < 1e-8);
}

TEST_CASE("three-form stabilizers") {
  // zero form: everything stabilizes
  ThreeFormD zero;
  zero.n = 5;
  CHECK(stabilizer_lambda3(zero).dim() == so_dim(5));
}

TEST_CASE("casimir on the defining module") {
  UpsilonTensor u = upsilon_from_cubic(5);
  Subspace h = stabilizer_sym3(u, Mode::Float);
  Eigen::MatrixXd cas = casimir_matrix(h, ModuleKind::Vector, 5);
  // irreducible action: the Casimir is scalar
  const double lambda = cas.trace() / 5.0;
  CHECK((cas - lambda * Eigen::MatrixXd::Identity(5, 5)).norm() < 1e-10);
  CHECK(casimir_commutation_residual(cas, h, ModuleKind::Vector, 5) < 1e-10);
  CHECK(commutant_dim_vector(h, 5) == 1);

  // so(n) itself acts irreducibly on R^n
  Subspace full = Subspace::from_float(so_dim(4), Eigen::MatrixXd::Identity(6, 6));
  Eigen::MatrixXd cas4 = casimir_matrix(full, ModuleKind::Vector, 4);
  const double l4 = cas4.trace() / 4.0;
  CHECK((cas4 - l4 * Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("bracket closure rejects a non-subalgebra") {
  // span{E12} in so(3) closes (abelian); span{E12, E23} does not
  Eigen::MatrixXd one_col = Eigen::MatrixXd::Zero(3, 1);
  one_col(pair_index(0, 1, 3), 0) = 1.0;
  CHECK(bracket_closure_check(Subspace::from_float(3, one_col), 3));

  Eigen::MatrixXd two_cols = Eigen::MatrixXd::Zero(3, 2);
  two_cols(pair_index(0, 1, 3), 0) = 1.0;
  two_cols(pair_index(1, 2, 3), 1) = 1.0;
  CHECK_FALSE(bracket_closure_check(Subspace::from_float(3, two_cols), 3));
}

TEST_CASE("conn module action matches the slice formula") {
  std::mt19937_64 rng(5150);
  std::normal_distribution<double> gauss;
  const int n = 5;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      x(a, b) = gauss(rng);
      x(b, a) = -x(a, b);
    }
  ConnElement c = ConnElement::zero(n);
  for (int i = 0; i < c.comps.size(); ++i) c.comps[i] = gauss(rng);

  Eigen::VectorXd moved = rho_matrix(x, ModuleKind::Conn) * c.comps;
  // independent route: (X.C)_l = [X, C_l] + sum_m X_lm C_m per slice
  for (int l = 0; l < n; ++l) {
    Eigen::MatrixXd expect = bracket(x, c.slice(l));
    for (int m = 0; m < n; ++m) expect += x(l, m) * c.slice(m);
    ConnElement mv = ConnElement::zero(n);
    mv.comps = moved;
    CHECK((mv.slice(l) - expect).norm() < 1e-12);
  }
}
