#pragma once

#include "isocubic/upsilon.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isocubic {

struct CurvatureCluster {
  double value = 0.0;
  int multiplicity = 0;
  double within_point_spread = 0.0;
  double across_point_spread = 0.0;
};

/// Principal-curvature statistics of the level hypersurface
/// S = S^{n-1} cap {F = c} sampled at several points. For regular levels
/// there are exactly 3 clusters with multiplicities (n-2)/3 each.
struct CurvatureReport {
  int n = 0;
  double level = 0.0;
  int sample_count = 0;
  std::vector<CurvatureCluster> clusters;
  double max_pairwise_gap_violation = 0.0;  // 0 when all gaps exceed 10*tol
  bool pass = false;
  std::string failure;
  /// Per-sample eigenvalue rows for the optional CSV export.
  std::vector<std::vector<double>> sample_eigenvalues;
  std::vector<Eigen::VectorXd> sample_points;
};

/// Seeded unit vectors with |F(a) - c| < 1e-12, by per-sample-seeded random
/// starts followed by alternating tangential Newton correction and
/// renormalization (at most 100 iterations). |c| < 1 is required: the cubic
/// attains max |F| = 1 on the sphere, where the spherical gradient dies.
std::vector<Eigen::VectorXd> sample_level_set(const UpsilonFloat& u, double c, int count,
                                              std::uint64_t seed);

/// Shape operator of S inside the unit sphere at a (with respect to the
/// normalized spherical gradient), an (n-2)x(n-2) symmetric matrix in an
/// orthonormal tangent basis. All derivatives come from the closed forms
/// grad_i F = 3 Y_ijk a_j a_k and Hess_ij = 6 Y_ijk a_k.
Eigen::MatrixXd shape_operator(const UpsilonFloat& u, const Eigen::VectorXd& a);

CurvatureReport verify_isoparametric(const UpsilonFloat& u, double c, int samples,
                                     double tol, std::uint64_t seed);

}  // namespace isocubic
