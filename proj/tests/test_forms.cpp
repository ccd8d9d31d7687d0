#include "isocubic/forms.hpp"

#include <doctest.h>

using namespace isocubic;

TEST_CASE("catalog matches the defining formulas term by term") {
  FormCatalog cat = build_catalog();
  const ScalarQ3 one(1);
  const ScalarQ3 s3 = ScalarQ3::sqrt3();

  // tau_3 = t12 + 2 t43, i.e. -2 at (3,4)
  CHECK(cat.tau[2].get(1, 2) == one);
  CHECK(cat.tau[2].get(3, 4) == ScalarQ3(-2));
  CHECK(cat.tau[0].get(1, 4) == one);
  CHECK(cat.tau[0].get(2, 3) == one);
  CHECK(cat.tau[0].get(1, 5) == s3);
  CHECK(cat.tau[1].get(1, 3) == one);
  CHECK(cat.tau[1].get(2, 4) == ScalarQ3(-1));
  CHECK(cat.tau[1].get(2, 5) == s3);

  // psi entries
  CHECK(cat.psi.get(1, 4, 6) == one);
  CHECK(cat.psi.get(2, 3, 6) == one);
  CHECK(cat.psi.get(1, 5, 6) == s3);
  CHECK(cat.psi.get(1, 3, 7) == one);
  CHECK(cat.psi.get(2, 4, 7) == ScalarQ3(-1));
  CHECK(cat.psi.get(2, 5, 7) == s3);
  CHECK(cat.psi.get(1, 2, 8) == one);
  CHECK(cat.psi.get(3, 4, 8) == ScalarQ3(-2));
  CHECK(cat.psi.get(6, 7, 8) == one);
  CHECK(cat.psi.entries.size() == 9);

  // sigma and phi entries; sigma3 ^ t7 puts +1 at (3,4,7)
  CHECK(cat.sigma[2].get(1, 2) == one);
  CHECK(cat.sigma[2].get(3, 4) == one);
  CHECK(cat.phi.get(3, 4, 7) == one);
  CHECK(cat.phi.get(1, 3, 5) == one);
  CHECK(cat.phi.get(2, 4, 5) == ScalarQ3(-1));
  CHECK(cat.phi.get(1, 4, 6) == ScalarQ3(-1));
  CHECK(cat.phi.get(2, 3, 6) == ScalarQ3(-1));
  CHECK(cat.phi.get(1, 2, 7) == one);
  CHECK(cat.phi.get(5, 6, 7) == one);
  CHECK(cat.phi.entries.size() == 7);
}

TEST_CASE("form stabilizers") {
  FormStabilizerReport rep = verify_form_stabilizers();
  CHECK(rep.psi.dim == 8);
  CHECK(rep.psi_exact_dim == 8);
  CHECK(rep.phi.dim == 14);
  CHECK(rep.psi.bracket_closed);
  CHECK(rep.phi.bracket_closed);
  CHECK(rep.psi.commutant_dim == 1);
  CHECK(rep.phi.commutant_dim == 1);
  CHECK(rep.psi.annihilates_form);
  CHECK(rep.phi.annihilates_form);
  CHECK(rep.pass);
}

TEST_CASE("tau span") {
  TauSpanReport rep = verify_tau_span();
  CHECK(rep.span_dim == 3);
  CHECK(rep.bracket_closed);
  CHECK(rep.commutant_dim == 1);
  CHECK(rep.pass);
  MESSAGE("tau span equals the dim-5 stabilizer in this frame: ",
          rep.equals_stabilizer);
}

TEST_CASE("v1 link between the symmetric and skew descriptions") {
  V1LinkReport rep = verify_v1_link(kDefaultRankTol, /*search_frame=*/true, /*seed=*/0);
  CHECK(rep.intersection_dim == 1);
  CHECK(rep.psi_prime_stab_dim == 8);
  CHECK(rep.stab_contains_h8);
  CHECK(rep.pass);
  CHECK(rep.frame_search_residual.has_value());
  MESSAGE("psi' equals catalog psi componentwise: ", rep.equals_catalog_psi);
  MESSAGE("orthogonal frame search residual: ", *rep.frame_search_residual,
          " found=", rep.frame_found);
}
