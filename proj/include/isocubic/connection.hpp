#pragma once

#include "isocubic/decompose.hpp"

namespace isocubic {

/// Precomputed projection data for the characteristic-connection split of a
/// fixed (n, Upsilon): orthonormal bases of h (x) R^n and embed(Lambda^3),
/// the intersection line in dimension 8, and the least-squares solver for
/// the direct-sum coordinates. Read-only after construction.
class SplitContext {
public:
  SplitContext(const UpsilonTensor& u, double rank_tol = kDefaultRankTol);

  int n() const { return n_; }
  const Subspace& stabilizer() const { return h_; }
  int ambiguity_dim() const { return static_cast<int>(v1_.cols()); }
  /// Unit generator of the intersection (dimension 8 only; empty otherwise).
  const Eigen::MatrixXd& intersection_basis() const { return v1_; }

  const Eigen::MatrixXd& basis_h() const { return qh_; }
  const Eigen::MatrixXd& basis_torsion() const { return qe_reduced_; }
  /// Least-squares coordinates of a vector on [basis_h | basis_torsion].
  Eigen::VectorXd solve_sum_coordinates(const Eigen::VectorXd& v) const {
    return solver_.solve(v);
  }

private:
  int n_ = 0;
  Subspace h_;
  Eigen::MatrixXd qh_;          // orthonormal basis of h (x) R^n
  Eigen::MatrixXd qe_;          // orthonormal basis of embed(Lambda^3)
  Eigen::MatrixXd v1_;          // intersection generators (0 or 1 column)
  Eigen::MatrixXd qe_reduced_;  // embed(Lambda^3) with the intersection removed
  Eigen::MatrixXd sum_basis_;   // [qh_ | qe_reduced_], full column rank
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> solver_;
};

/// C = gamma + 1/2 embed(torsion) + residual with gamma in h (x) R^n,
/// residual orthogonal to the algebraic sum. In dimension 8 the component
/// along the 1-dimensional intersection V1 is assigned to gamma and
/// ambiguity_dim = 1 is reported.
struct SplitResult {
  ConnElement gamma;
  ThreeFormD torsion;
  ConnElement residual;
  int ambiguity_dim = 0;

  ConnElement reconstruct() const;
};

SplitResult split(const ConnElement& c, const SplitContext& ctx);

/// True iff the residual (and, in dimension 8, the V1 component) is below
/// tol; the nearly-integrable defect of such elements is verified to vanish
/// within a derived bound rather than assumed.
bool admits_characteristic(const ConnElement& c, const SplitContext& ctx,
                           const UpsilonFloat& u, double tol);

/// Exact split over Q(sqrt3) for n = 5 and 8 (where the exact stabilizer is
/// cheap). Input and output connection coordinates are pair-major QVecs of
/// length conn_space_dim(n). The reconstruction identity
/// c = gamma + (1/2) embed(torsion) + residual holds exactly, the residual
/// is exactly orthogonal to the algebraic sum, and in dimension 8 the
/// embedded part is exactly orthogonal to the intersection line.
struct ExactSplitResult {
  QVec gamma;
  ThreeFormQ torsion;
  QVec residual;
  int ambiguity_dim = 0;
};
ExactSplitResult split_exact(const QVec& conn, const UpsilonTensor& u);

}  // namespace isocubic
