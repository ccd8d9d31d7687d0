#pragma once

#include "isocubic/decompose.hpp"

#include <optional>
#include <string>

namespace isocubic {

/// Exact 2-form, strictly increasing 1-based pairs.
struct TwoFormQ {
  int n = 0;
  std::map<std::array<int, 2>, ScalarQ3> entries;

  ScalarQ3 get(int i, int j) const;
  /// Skew matrix (float) of the form under theta^i ^ theta^j <-> E_ij.
  Eigen::MatrixXd to_skew() const;
};

/// The distinguished forms: tau_i and psi on R^8, sigma_i and phi on R^7.
struct FormCatalog {
  std::array<TwoFormQ, 3> tau;
  ThreeFormQ psi;
  std::array<TwoFormQ, 3> sigma;
  ThreeFormQ phi;
};

/// Exact construction:
///   tau1 = t14 + t23 + sqrt3 t15, tau2 = t13 + t42 + sqrt3 t25,
///   tau3 = t12 + 2 t43,
///   psi  = tau1^t6 + tau2^t7 + tau3^t8 + t678,
///   sigma1 = t13 + t42, sigma2 = t41 + t32, sigma3 = t12 + t34,
///   phi  = sigma1^t5 + sigma2^t6 + sigma3^t7 + t567.
FormCatalog build_catalog();

struct StabilizerCheck {
  int dim = 0;
  bool bracket_closed = false;
  int commutant_dim = 0;
  bool annihilates_form = false;  // act_lambda3(X, form) = 0 for basis X
};

struct FormStabilizerReport {
  StabilizerCheck psi;   // expected dim 8
  StabilizerCheck phi;   // expected dim 14
  int psi_exact_dim = 0; // cross-check by exact elimination
  bool pass = false;
};
FormStabilizerReport verify_form_stabilizers(double rank_tol = kDefaultRankTol);

struct TauSpanReport {
  int span_dim = 0;        // expected 3
  bool bracket_closed = false;
  int commutant_dim = 0;   // expected 1 on R^5
  /// Observation, not a requirement: whether the span coincides with the
  /// stabilizer of the dimension-5 tensor in this frame.
  bool equals_stabilizer = false;
  bool pass = false;
};
TauSpanReport verify_tau_span(double rank_tol = kDefaultRankTol);

struct V1LinkReport {
  int intersection_dim = 0;      // expected 1
  int psi_prime_stab_dim = 0;    // expected 8
  bool stab_contains_h8 = false; // stabilizer of Upsilon_8 inside stab(psi')
  bool equals_catalog_psi = false;       // literal componentwise match (up to scale)
  std::optional<double> frame_search_residual;  // best |R*psi' - psi| found
  bool frame_found = false;
  bool pass = false;
};
/// Reads the generator of h8 (x) R^8 cap embed(Lambda^3 R^8) back as a
/// 3-form and checks its stabilizer properties; optionally runs a seeded
/// numerical search for an orthogonal frame change onto the catalog psi.
V1LinkReport verify_v1_link(double rank_tol = kDefaultRankTol, bool search_frame = true,
                            std::uint64_t seed = 0);

}  // namespace isocubic
