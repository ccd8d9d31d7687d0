#include "isocubic/connection.hpp"

#include "isocubic/cubic_form.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace isocubic;

namespace {

ConnElement random_conn(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ConnElement c = ConnElement::zero(n);
  for (int i = 0; i < c.comps.size(); ++i) c.comps[i] = gauss(rng);
  return c;
}

ThreeFormD random_form(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ThreeFormD f;
  f.n = n;
  for (const auto& idx : sorted_triples(n)) f.entries[idx] = gauss(rng);
  return f;
}

}  // namespace

TEST_CASE("split fixes each summand") {
  UpsilonTensor u = upsilon_from_cubic(5);
  SplitContext ctx(u);
  std::mt19937_64 rng(21);

  // C already h-valued
  Eigen::MatrixXd qh = ctx.basis_h();
  for (int c = 0; c < qh.cols(); ++c) {
    ConnElement conn = ConnElement::zero(5);
    conn.comps = qh.col(c);
    SplitResult res = split(conn, ctx);
    CHECK((res.gamma.comps - conn.comps).norm() < 1e-12);
    CHECK(res.torsion.norm() < 1e-12);
    CHECK(res.residual.comps.norm() < 1e-12);
  }

  // C = 1/2 embed(T0): recovered torsion is T0
  for (int t = 0; t < 10; ++t) {
    ThreeFormD f = random_form(5, rng);
    ConnElement conn = embed_lambda3(f);
    conn.comps *= 0.5;
    SplitResult res = split(conn, ctx);
    CHECK(res.gamma.comps.norm() < 1e-10);
    CHECK(res.residual.comps.norm() < 1e-10);
    for (const auto& idx : sorted_triples(5)) {
      CHECK(res.torsion.get(idx[0], idx[1], idx[2]) ==
            doctest::Approx(f.get(idx[0], idx[1], idx[2])).epsilon(1e-10));
    }
  }
}

TEST_CASE("split reconstruction against an independent projection") {
  UpsilonTensor u = upsilon_from_cubic(5);
  SplitContext ctx(u);
  std::mt19937_64 rng(22);

  // independent route: normal-equation projection onto [qh qe]
  Eigen::MatrixXd b(ctx.basis_h().rows(), ctx.basis_h().cols() + ctx.basis_torsion().cols());
  b << ctx.basis_h(), ctx.basis_torsion();
  Eigen::MatrixXd gram = b.transpose() * b;
  for (int t = 0; t < 50; ++t) {
    ConnElement c = random_conn(5, rng);
    SplitResult res = split(c, ctx);
    CHECK((res.reconstruct().comps - c.comps).norm() < 1e-10);

    Eigen::VectorXd coef = gram.ldlt().solve(b.transpose() * c.comps);
    Eigen::VectorXd proj = b * coef;
    Eigen::VectorXd resid = c.comps - proj;
    CHECK((res.residual.comps - resid).norm() < 1e-9);
    // residual norm^2 = |C|^2 - |proj|^2 and orthogonality
    CHECK(res.residual.comps.squaredNorm() ==
          doctest::Approx(c.comps.squaredNorm() - proj.squaredNorm()).epsilon(1e-9));
    CHECK(std::abs(res.residual.comps.dot(res.gamma.comps)) < 1e-9);
    CHECK(std::abs(res.residual.comps.dot(embed_lambda3(res.torsion).comps)) < 1e-9);
    CHECK(res.ambiguity_dim == 0);
  }
}

TEST_CASE("split is idempotent") {
  std::mt19937_64 rng(23);
  for (int n : {5, 8}) {
    SplitContext ctx(upsilon_from_cubic(n));
    for (int t = 0; t < 10; ++t) {
      ConnElement c = random_conn(n, rng);
      SplitResult first = split(c, ctx);
      ConnElement clean = first.gamma;
      clean.comps += 0.5 * embed_lambda3(first.torsion).comps;
      SplitResult second = split(clean, ctx);
      CHECK((second.gamma.comps - first.gamma.comps).norm() < 1e-9);
      CHECK(second.residual.comps.norm() < 1e-9);
      Eigen::VectorXd t1 = first.torsion.to_vector();
      Eigen::VectorXd t2 = second.torsion.to_vector();
      CHECK((t1 - t2).norm() < 1e-9);
    }
  }
}

TEST_CASE("dimension-8 split assigns the intersection line to gamma deterministically") {
  SplitContext ctx(upsilon_from_cubic(8));
  CHECK(ctx.ambiguity_dim() == 1);
  std::mt19937_64 rng(24);
  ConnElement v1 = ConnElement::zero(8);
  v1.comps = ctx.intersection_basis().col(0);
  SplitResult res = split(v1, ctx);
  // the v1 element lies in both summands; the convention books it to gamma
  CHECK((res.gamma.comps - v1.comps).norm() < 1e-9);
  CHECK(res.torsion.norm() < 1e-9);
  CHECK(res.residual.comps.norm() < 1e-9);
  // determinism: same input, same output
  ConnElement c = random_conn(8, rng);
  SplitResult r1 = split(c, ctx);
  SplitResult r2 = split(c, ctx);
  CHECK((r1.gamma.comps - r2.gamma.comps).norm() == 0.0);
}

TEST_CASE("gamma part is stable under a different orthonormal basis of the torsion side") {
  UpsilonTensor u = upsilon_from_cubic(5);
  SplitContext ctx(u);
  std::mt19937_64 rng(25);
  // mix the lambda3 basis by a random orthogonal matrix and re-project
  Eigen::MatrixXd qe = ctx.basis_torsion();
  Eigen::MatrixXd mix = isocubic::testing::random_rotation(static_cast<int>(qe.cols()), rng);
  Eigen::MatrixXd b2(qe.rows(), ctx.basis_h().cols() + qe.cols());
  b2 << ctx.basis_h(), qe * mix;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> solver(b2);
  for (int t = 0; t < 20; ++t) {
    ConnElement c = random_conn(5, rng);
    SplitResult res = split(c, ctx);
    Eigen::VectorXd coef = solver.solve(c.comps);
    Eigen::VectorXd gamma2 = ctx.basis_h() * coef.head(ctx.basis_h().cols());
    CHECK((res.gamma.comps - gamma2).norm() < 1e-10);
  }
}

TEST_CASE("exact split: reconstruction and orthogonality are identities") {
  std::mt19937_64 rng(27);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 2);
  for (int n : {5, 8}) {
    UpsilonTensor u = upsilon_from_cubic(n);
    const int ambient = conn_space_dim(n);

    QVec conn(ambient);
    for (auto& v : conn) v = ScalarQ3::of(num(rng), den(rng), num(rng), den(rng));
    ExactSplitResult res = split_exact(conn, u);
    CHECK(res.ambiguity_dim == (n == 8 ? 1 : 0));

    // reconstruct exactly: gamma + 1/2 embed(torsion) + residual = conn
    QVec rebuilt = res.gamma;
    const ScalarQ3 half = ScalarQ3::rational(1, 2);
    for (const auto& [idx, v] : res.torsion.entries) {
      const int i = idx[0] - 1, j = idx[1] - 1, k = idx[2] - 1;
      rebuilt[conn_index(i, j, k, n)] += half * v;
      rebuilt[conn_index(i, k, j, n)] -= half * v;
      rebuilt[conn_index(j, k, i, n)] += half * v;
    }
    for (int r = 0; r < ambient; ++r) rebuilt[r] += res.residual[r];
    for (int r = 0; r < ambient; ++r) CHECK(rebuilt[r] == conn[r]);

    // the residual is exactly orthogonal to both summands
    Subspace h = stabilizer_sym3(u, Mode::Exact);
    for (const auto& hvec : h_conn_basis(h, n).basis_q) {
      ScalarQ3 dot;
      for (int r = 0; r < ambient; ++r) dot += hvec[r] * res.residual[r];
      CHECK(dot == ScalarQ3());
    }
    for (const auto& t : sorted_triples(n)) {
      ScalarQ3 dot = res.residual[conn_index(t[0], t[1], t[2], n)] -
                     res.residual[conn_index(t[0], t[2], t[1], n)] +
                     res.residual[conn_index(t[1], t[2], t[0], n)];
      CHECK(dot == ScalarQ3());
    }

    // exact and float paths agree
    SplitContext ctx(u);
    ConnElement cf = ConnElement::zero(n);
    for (int r = 0; r < ambient; ++r) cf.comps[r] = conn[r].to_double();
    SplitResult fres = split(cf, ctx);
    double worst = 0.0;
    for (int r = 0; r < ambient; ++r) {
      worst = std::max(worst, std::abs(fres.gamma.comps[r] - res.gamma[r].to_double()));
      worst = std::max(worst,
                       std::abs(fres.residual.comps[r] - res.residual[r].to_double()));
    }
    CHECK(worst < 1e-9);
  }
  CHECK_THROWS_AS(split_exact(QVec(conn_space_dim(14)), upsilon_from_cubic(14)),
                  std::invalid_argument);
}

TEST_CASE("admits_characteristic verifies the defect") {
  UpsilonTensor u = upsilon_from_cubic(5);
  UpsilonFloat uf = UpsilonFloat::from(u);
  SplitContext ctx(u);
  std::mt19937_64 rng(26);
  std::normal_distribution<double> gauss;

  int admitted = 0;
  for (int t = 0; t < 100; ++t) {
    // random elements of the algebraic sum
    Eigen::VectorXd coef(ctx.basis_h().cols() + ctx.basis_torsion().cols());
    for (int i = 0; i < coef.size(); ++i) coef[i] = gauss(rng);
    ConnElement c = ConnElement::zero(5);
    c.comps = ctx.basis_h() * coef.head(ctx.basis_h().cols()) +
              ctx.basis_torsion() * coef.tail(ctx.basis_torsion().cols());
    REQUIRE(admits_characteristic(c, ctx, uf, 1e-8));
    CHECK(nearly_integrable_defect(c, uf).norm() < 1e-9 * std::max(1.0, c.comps.norm()));
    ++admitted;
  }
  CHECK(admitted == 100);

  // a deliberately injected residual flips the verdict
  ConnElement bad = random_conn(5, rng);
  SplitResult res = split(bad, ctx);
  if (res.residual.comps.norm() > 1e-6) {
    CHECK_FALSE(admits_characteristic(bad, ctx, uf, 1e-8));
  }
}
