#include "isocubic/decompose.hpp"

#include "isocubic/cubic_form.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <set>

using namespace isocubic;

TEST_CASE("torsion-type decompositions in dimensions 5 and 8") {
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
    DecompositionReport rep = isotypic(h, ModuleKind::Lambda3, 5);
    CHECK(rep.total_dim == 10);
    CHECK(rep.dims_desc() == std::vector<int>{7, 3});
    int dim_sum = 0;
    for (const auto& c : rep.components) {
      dim_sum += c.dim;
      CHECK(c.matched_irrep_dim.has_value());
    }
    CHECK(dim_sum == rep.total_dim);
  }
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(8), Mode::Float);
    DecompositionReport rep = isotypic(h, ModuleKind::Lambda3, 8);
    CHECK(rep.total_dim == 56);
    CHECK(rep.dims_desc() == std::vector<int>{27, 20, 8, 1});
    for (std::size_t i = 1; i < rep.components.size(); ++i) {
      CHECK(rep.components[i].casimir_eigenvalue >
            rep.components[i - 1].casimir_eigenvalue);
    }
    // casimir commutes with the action
    Eigen::MatrixXd cas = casimir_matrix(h, ModuleKind::Lambda3, 8);
    CHECK(casimir_commutation_residual(cas, h, ModuleKind::Lambda3, 8) < 1e-10);
  }
}

TEST_CASE("commutant analysis of the isotypic components") {
  // lambda3 in dimensions 5 and 8 is multiplicity free; the 20-dimensional
  // component carries a complex structure (commutant dim 2)
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
    CHECK(component_commutant_dims(h, ModuleKind::Lambda3, 5) == std::vector<int>{1, 1});
  }
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(8), Mode::Float);
    CHECK(component_commutant_dims(h, ModuleKind::Lambda3, 8) ==
          std::vector<int>{1, 2, 1, 1});
  }
  // so(5) (x) R^5 = V11 + V9 + 2 V7 + 2 V5 + 2 V3: clusters of a repeated
  // odd-dimensional type have commutant m^2
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
    DecompositionReport rep = isotypic(h, ModuleKind::Conn, 5);
    std::vector<int> cd = component_commutant_dims(h, ModuleKind::Conn, 5);
    REQUIRE(rep.components.size() == cd.size());
    std::multiset<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < cd.size(); ++i) {
      seen.insert({rep.components[i].dim, cd[i]});
    }
    std::multiset<std::pair<int, int>> expected = {
        {11, 1}, {9, 1}, {14, 4}, {10, 4}, {6, 4}};
    CHECK(seen == expected);
  }
  // the conn module at dim 14 is already beyond the intertwiner budget
  Subspace h14 = stabilizer_sym3(upsilon_from_cubic(14), Mode::Float);
  CHECK_THROWS_AS(component_commutant_dims(h14, ModuleKind::Conn, 14),
                  std::invalid_argument);
}

TEST_CASE("the conn module at dim 26 is gated behind the slow profile") {
  Subspace h = stabilizer_sym3(upsilon_from_cubic(26), Mode::Float);
  CHECK_THROWS_AS(isotypic(h, ModuleKind::Conn, 26), std::invalid_argument);
}

TEST_CASE("irrep dimension lists") {
  CHECK(irrep_dim_matches(5, 7));
  CHECK(irrep_dim_matches(5, 3));
  CHECK_FALSE(irrep_dim_matches(5, 4));
  CHECK(irrep_dim_matches(8, 27));
  CHECK_FALSE(irrep_dim_matches(8, 2));
  CHECK(irrep_dim_matches(14, 189));
  CHECK(irrep_dim_matches(26, 1274));
}

TEST_CASE("lambda3 embedding") {
  ThreeFormD t;
  t.n = 5;
  t.entries[{0, 1, 2}] = 1.0;  // e1 ^ e2 ^ e3
  ConnElement c = embed_lambda3(t);
  int nonzero_slices = 0;
  for (int l = 0; l < 5; ++l) {
    if (c.slice(l).norm() > 0) ++nonzero_slices;
  }
  CHECK(nonzero_slices == 3);
  // injectivity and the 3x inner-product scaling
  std::mt19937_64 rng(4);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    ThreeFormD t1, t2;
    t1.n = t2.n = 5;
    for (const auto& idx : sorted_triples(5)) {
      t1.entries[idx] = gauss(rng);
      t2.entries[idx] = gauss(rng);
    }
    ConnElement c1 = embed_lambda3(t1), c2 = embed_lambda3(t2);
    double dot_forms = 0.0;
    for (const auto& idx : sorted_triples(5)) {
      dot_forms += t1.entries[idx] * t2.entries[idx];
    }
    CHECK(c1.comps.dot(c2.comps) == doctest::Approx(3.0 * dot_forms).epsilon(1e-12));
    ThreeFormD back = unembed_conn(c1);
    for (const auto& idx : sorted_triples(5)) {
      CHECK(back.get(idx[0], idx[1], idx[2]) ==
            doctest::Approx(t1.get(idx[0], idx[1], idx[2])));
    }
  }
}

TEST_CASE("subspace sum and intersection") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> gauss;
  auto random_subspace = [&](int ambient, int dim) {
    Eigen::MatrixXd b(ambient, dim);
    for (int i = 0; i < ambient; ++i)
      for (int j = 0; j < dim; ++j) b(i, j) = gauss(rng);
    return Subspace::from_float(ambient, b);
  };
  // U = V
  Subspace u = random_subspace(12, 4);
  CHECK(subspace_sum_dim(u, u) == 4);
  CHECK(subspace_intersection(u, u).dim() == 4);
  // generic subspaces intersect trivially; rank-nullity holds
  for (int t = 0; t < 5; ++t) {
    Subspace a = random_subspace(12, 4), b = random_subspace(12, 5);
    int sum = subspace_sum_dim(a, b);
    int inter = subspace_intersection(a, b).dim();
    CHECK(sum + inter == 9);
  }
  // engineered shared direction
  {
    Eigen::MatrixXd ba(10, 2), bb(10, 2);
    for (int i = 0; i < 10; ++i) {
      ba(i, 0) = gauss(rng);
      ba(i, 1) = gauss(rng);
      bb(i, 1) = gauss(rng);
    }
    bb.col(0) = ba.col(0) + 2.0 * ba.col(1);
    Subspace a = Subspace::from_float(10, ba), b = Subspace::from_float(10, bb);
    CHECK(subspace_sum_dim(a, b) == 3);
    Subspace inter = subspace_intersection(a, b);
    REQUIRE(inter.dim() == 1);
    // the intersection vector lies in both spans
    Eigen::VectorXd v = inter.orthonormal_basis().col(0);
    CHECK((v - a.projector() * v).norm() < 1e-8);
    CHECK((v - b.projector() * v).norm() < 1e-8);
  }
}

TEST_CASE("intersection of h (x) R^n with the embedded 3-forms") {
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
    Subspace inter = subspace_intersection(h_conn_basis(h, 5), lambda3_conn_subspace(5));
    CHECK(inter.dim() == 0);
  }
  {
    Subspace h = stabilizer_sym3(upsilon_from_cubic(8), Mode::Float);
    Subspace inter = subspace_intersection(h_conn_basis(h, 8), lambda3_conn_subspace(8));
    CHECK(inter.dim() == 1);
  }
}

TEST_CASE("h_conn_basis spans h-valued connection elements") {
  Subspace h = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
  Subspace hc = h_conn_basis(h, 5);
  CHECK(hc.dim() == 15);
  CHECK(hc.ambient == 50);
}

TEST_CASE("restricted component counts") {
  ComponentCounts c5 = restricted_component_counts(5);
  CHECK(c5.total == 50);
  CHECK(c5.restricted == 25);
  CHECK(c5.intersection_dim == 0);
  ComponentCounts c8 = restricted_component_counts(8);
  CHECK(c8.total == 224);
  CHECK(c8.restricted == 118);
  CHECK(c8.intersection_dim == 1);
  CHECK_THROWS_AS(restricted_component_counts(6), std::invalid_argument);
}

TEST_CASE("adjoint casimir eigenvalue is scalar and negative") {
  Subspace h = stabilizer_sym3(upsilon_from_cubic(5), Mode::Float);
  const double lambda = adjoint_casimir_eigenvalue(h, 5);
  CHECK(lambda < 0.0);
}

// The 8450-dimensional eigensolve; run via the slow-profile ctest target.
TEST_CASE("slow-profile: adjoint-type isotypic of conn at dim 26 misses the algebraic sum" *
          doctest::skip()) {
  UpsilonTensor u = upsilon_from_cubic(26);
  Subspace h = stabilizer_sym3(u, Mode::Float);
  const double lambda_adj = adjoint_casimir_eigenvalue(h, 26);
  IsotypicSplit split = isotypic_split(h, ModuleKind::Conn, 26);

  Eigen::MatrixXd qh = h_conn_basis(h, 26).float_basis();  // orthonormal by construction
  const double inv_s3 = 1.0 / std::sqrt(3.0);

  int adjoint_clusters = 0;
  for (std::size_t ci = 0; ci < split.report.components.size(); ++ci) {
    const auto& comp = split.report.components[ci];
    if (std::abs(comp.casimir_eigenvalue - lambda_adj) > 1e-6 * std::abs(lambda_adj)) {
      continue;
    }
    ++adjoint_clusters;
    CHECK(comp.dim % 52 == 0);
    const Eigen::MatrixXd& basis = split.bases[ci];
    // orthogonal to h (x) R^26
    CHECK((qh.transpose() * basis).norm() < 1e-7);
    // orthogonal to the embedded 3-forms: pair against the orthonormal
    // embedded basis, <conn, embed(e_ijk)>/sqrt3
    double worst = 0.0;
    for (int c = 0; c < basis.cols(); ++c) {
      ConnElement conn = ConnElement::zero(26);
      conn.comps = basis.col(c);
      for (const auto& idx : sorted_triples(26)) {
        const int i = idx[0], j = idx[1], k = idx[2];
        const double pairing =
            (conn.at(i, j, k) - conn.at(i, k, j) + conn.at(j, k, i)) * inv_s3;
        worst = std::max(worst, std::abs(pairing));
      }
    }
    CHECK(worst < 1e-7);
  }
  CHECK(adjoint_clusters >= 1);
  MESSAGE("adjoint-eigenvalue clusters found: ", adjoint_clusters);
  for (std::size_t ci = 0; ci < split.report.components.size(); ++ci) {
    const auto& comp = split.report.components[ci];
    if (std::abs(comp.casimir_eigenvalue - lambda_adj) <= 1e-6 * std::abs(lambda_adj)) {
      MESSAGE("adjoint cluster dim ", comp.dim, " (multiplicity ", comp.dim / 52, ")");
    }
  }
}
