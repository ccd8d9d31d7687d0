#pragma once

#include "isocubic/common.hpp"
#include "isocubic/scalar_q3.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isocubic {

/// Totally symmetric trace-free rank-3 tensor on R^n with exact entries.
/// Only canonically sorted index triples (i <= j <= k, 1-based as in all
/// I/O) are stored; the metric of the quadratic identity is the Kronecker
/// delta in this frame.
struct UpsilonTensor {
  int n = 0;
  std::map<std::array<int, 3>, ScalarQ3> entries;

  /// Component for any index order (1-based). Zero when absent.
  ScalarQ3 get(int i, int j, int k) const;
  /// Insert/overwrite a component; indices are sorted, zeros dropped.
  void set(std::array<int, 3> ijk, const ScalarQ3& v);

  /// F(a) = sum over all ordered triples of Y_ijk a_i a_j a_k.
  ScalarQ3 evaluate(std::span<const ScalarQ3> a) const;

  UpsilonTensor scaled(const ScalarQ3& s) const;
};

/// Float mirror of UpsilonTensor for the numeric paths (0-based indices).
struct UpsilonFloat {
  int n = 0;
  struct Entry {
    int i, j, k;  // 0-based, i <= j <= k
    double v;
  };
  std::vector<Entry> entries;

  static UpsilonFloat from(const UpsilonTensor& u);

  double evaluate(const Eigen::VectorXd& a) const;
  /// grad_i F = 3 Y_ijk a_j a_k (ordered sums).
  Eigen::VectorXd gradient(const Eigen::VectorXd& a) const;
  /// Hess_ij F = 6 Y_ijk a_k.
  Eigen::MatrixXd hessian(const Eigen::VectorXd& a) const;
};

/// One exact pass/fail entry of the identity suite.
struct IdentityCheck {
  std::string name;
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct IdentityReport {
  int n = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

/// Exact verification of the five defining identities: structural total
/// symmetry, trace-freeness, the quadratic identity
///   Y_jki Y_lmi + Y_lji Y_kmi + Y_kli Y_jmi = g_jk g_lm + g_lj g_km + g_kl g_jm,
/// harmonicity of the cubic F(a) = Y_ijk a_i a_j a_k, and the eikonal
/// identity |grad F|^2 = 9 |a|^4 (expanded symbolically).
IdentityReport verify_identities(const UpsilonTensor& u);

/// Element of so(n) (x) R^n: skew pair slot (a,b) with a < b per frame
/// index l, pair-major layout (see conn_index). Stored as floats; exact
/// paths assemble their own columns.
struct ConnElement {
  int n = 0;
  Eigen::VectorXd comps;

  static ConnElement zero(int n);
  double& at(int a, int b, int l) { return comps[conn_index(a, b, l, n)]; }
  double at(int a, int b, int l) const { return comps[conn_index(a, b, l, n)]; }
  /// Skew matrix of the frame-l slice.
  Eigen::MatrixXd slice(int l) const;
};

/// Totally symmetric rank-4 tensor, sorted 0-based quadruples.
struct Sym4Tensor {
  int n = 0;
  std::map<std::array<int, 4>, double> entries;
  /// Frobenius norm over sorted entries weighted by arrangement counts.
  double norm() const;
};

/// Pointwise algebraic model of the nearly-integrable defect: symmetrize
/// D_lijk = sum_m [C_mi|l Y_mjk + C_mj|l Y_imk + C_mk|l Y_ijm] over all of
/// (l,i,j,k) (average over the 24 permutations).
Sym4Tensor nearly_integrable_defect(const ConnElement& c, const UpsilonFloat& u);

/// Dimension of the kernel of C -> nearly_integrable_defect(C, u) on
/// so(n) (x) R^n. Exact elimination over Q(sqrt3) for n = 5, 8; float rank
/// (pivoted Cholesky of the Gram matrix, pivot cutoff (rank_tol)^2 relative
/// to the largest diagonal) for n = 14, 26.
int nearly_integrable_kernel_dim(const UpsilonTensor& u, double rank_tol = kDefaultRankTol);

/// Rank of a positive semidefinite matrix by diagonally pivoted Cholesky;
/// pivots below sv_tol^2 * max_diag count as zero. Destroys g.
int psd_rank(Eigen::MatrixXd& g, double sv_tol);

}  // namespace isocubic
