#pragma once

#include "isocubic/lie_algebra.hpp"

#include <optional>
#include <string>

namespace isocubic {

struct IsotypicComponent {
  double casimir_eigenvalue = 0.0;
  int dim = 0;
  std::optional<int> matched_irrep_dim;
};

/// Casimir-eigenspace listing of an h-module. Components are ordered by
/// ascending eigenvalue and separated by more than the clustering tolerance;
/// their dims sum to total_dim.
struct DecompositionReport {
  std::string module_label;
  int total_dim = 0;
  std::vector<IsotypicComponent> components;

  /// Cluster dims in descending order (the torsion-type signature).
  std::vector<int> dims_desc() const;
};

/// Whether dim appears in the printed list of real irreducible dimensions
/// of the structure group H_n (odd numbers for SO(3); explicit lists for
/// SU(3), Sp(3) and F4).
bool irrep_dim_matches(int n, int dim);

/// Throws std::invalid_argument ("module too large") for the conn module at
/// n = 26 unless slow_profile is set: that eigensolve is 8450-dimensional.
DecompositionReport isotypic(const Subspace& h, ModuleKind module, int n,
                             double cluster_tol = kDefaultClusterTol,
                             bool slow_profile = false);

/// Same computation keeping the eigenvector bases of each component.
struct IsotypicSplit {
  DecompositionReport report;
  std::vector<Eigen::MatrixXd> bases;  // one orthonormal basis per component
};
IsotypicSplit isotypic_split(const Subspace& h, ModuleKind module, int n,
                             double cluster_tol = kDefaultClusterTol);

/// Casimir eigenvalue of h acting on itself (adjoint module); the action is
/// irreducible for the stabilizers here, so the operator is scalar.
double adjoint_casimir_eigenvalue(const Subspace& h, int n);

/// Commutant dimension of the restricted h-action on each isotypic
/// component, in report order: 1 for a multiplicity-free real-type
/// component, m^2 * dim End(V) in general. The intertwiner systems are
/// quadratic in the component dimension, so this is offered for modules of
/// dimension <= 400; larger modules throw std::invalid_argument.
std::vector<int> component_commutant_dims(const Subspace& h, ModuleKind module, int n,
                                          double cluster_tol = kDefaultClusterTol,
                                          double rank_tol = kDefaultRankTol);

/// Inclusion of 3-forms into connection space, C_(a,b)|l = T_abl.
ConnElement embed_lambda3(const ThreeFormD& t);
/// Left inverse on the image: T_ijk = C_(i,j)|k for i < j < k.
ThreeFormD unembed_conn(const ConnElement& c);

/// dim(U + V) as the rank of the concatenated bases.
int subspace_sum_dim(const Subspace& u, const Subspace& v);
/// U cap V; exact nullspace when both operands are exact, principal-angle
/// extraction at the float rank tolerance otherwise.
Subspace subspace_intersection(const Subspace& u, const Subspace& v);

/// Span of Y_a (x) e_l over basis elements of h and frame indices; the
/// subspace of connection elements with values in h.
Subspace h_conn_basis(const Subspace& h, int n);
/// embed(Lambda^3 R^n) as a subspace of connection space.
Subspace lambda3_conn_subspace(int n);

struct ComponentCounts {
  int total = 0;          // dim so(n) * n
  int restricted = 0;     // dim(h (x) R^n + embed(Lambda^3)), minus the
                          // 1-dimensional exclusion in dimension 8
  int intersection_dim = 0;
};
/// The connection-component bookkeeping for the four point dimensions.
ComponentCounts restricted_component_counts(int n, double rank_tol = kDefaultRankTol);

}  // namespace isocubic
