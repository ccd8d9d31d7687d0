#pragma once

#include "isocubic/common.hpp"
#include "isocubic/exact_linalg.hpp"
#include "isocubic/upsilon.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <map>
#include <vector>

namespace isocubic {

/// Linear subspace of R^ambient carrying either an exact or a float basis.
/// Basis vectors are linearly independent (exact rank, or float rank at
/// rank_tol); dim() is the basis length.
struct Subspace {
  int ambient = 0;
  Mode mode = Mode::Float;
  Eigen::MatrixXd basis_f;       // ambient x dim, float mode
  std::vector<QVec> basis_q;     // exact mode
  double rank_tol = kDefaultRankTol;

  int dim() const {
    return mode == Mode::Float ? static_cast<int>(basis_f.cols())
                               : static_cast<int>(basis_q.size());
  }
  static Subspace from_float(int ambient, Eigen::MatrixXd basis,
                             double rank_tol = kDefaultRankTol);
  static Subspace from_exact(int ambient, std::vector<QVec> basis);

  /// Float copy (exact entries rounded once).
  Eigen::MatrixXd float_basis() const;
  /// Orthonormal float basis, columns.
  Eigen::MatrixXd orthonormal_basis() const;
  /// Orthogonal projector onto the subspace (float).
  Eigen::MatrixXd projector() const;
};

/// Alternating rank-3 tensor with float entries; strictly increasing
/// 0-based triples stored, other index orders recovered by sign.
struct ThreeFormD {
  int n = 0;
  std::map<std::array<int, 3>, double> entries;

  double get(int i, int j, int k) const;
  void set_sorted(int i, int j, int k, double v);
  /// Coordinates over sorted_triples(n).
  Eigen::VectorXd to_vector() const;
  static ThreeFormD from_vector(int n, const Eigen::VectorXd& v);
  double norm() const;
};

/// Exact alternating rank-3 tensor (1-based sorted triples, matching the
/// JSON conventions).
struct ThreeFormQ {
  int n = 0;
  std::map<std::array<int, 3>, ScalarQ3> entries;

  ScalarQ3 get(int i, int j, int k) const;
  ThreeFormD to_float() const;
};

/// Totally symmetric rank-3 float tensor (sorted 0-based triples); the
/// value type of the so(n)-action on Upsilon.
struct Sym3Tensor {
  int n = 0;
  std::map<std::array<int, 3>, double> entries;
  double get(int i, int j, int k) const;
  double norm() const;
  bool is_zero(double tol) const;
};

/// Basis E_ab = e_a e_b^T - e_b e_a^T of so(n), a < b in pair_index order.
/// Orthonormal under <X,Y> = 1/2 tr(X^T Y), so so(n) coordinates are plain
/// entry reads: coords[pair_index(a,b,n)] = X(a,b).
std::vector<Eigen::MatrixXd> so_basis(int n);
Eigen::MatrixXd skew_from_coords(const Eigen::VectorXd& coords, int n);
Eigen::VectorXd coords_from_skew(const Eigen::MatrixXd& x);

Eigen::MatrixXd bracket(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y);

/// (X.Y)_ijk = sum_m [X_mi Y_mjk + X_mj Y_imk + X_mk Y_ijm].
Sym3Tensor act_sym3(const Eigen::MatrixXd& x, const UpsilonFloat& u);
/// Same action restricted to alternating tensors.
ThreeFormD act_lambda3(const Eigen::MatrixXd& x, const ThreeFormD& t);

/// Nullspace of X -> act_sym3(X, u) on so(n). Exact mode runs Gauss
/// elimination over Q(sqrt3); float mode runs an SVD nullspace at rank_tol.
Subspace stabilizer_sym3(const UpsilonTensor& u, Mode mode,
                         double rank_tol = kDefaultRankTol);
/// Nullspace of X -> act_lambda3(X, t) on so(n).
Subspace stabilizer_lambda3(const ThreeFormD& t, double rank_tol = kDefaultRankTol);
Subspace stabilizer_lambda3_exact(const ThreeFormQ& t);

/// True iff [X_a, X_b] stays in span(s) for all basis pairs.
bool bracket_closure_check(const Subspace& s, int n, double tol = kDefaultRankTol);

enum class ModuleKind { Vector, Lambda3, Conn };
const char* module_name(ModuleKind m);
int module_dim(ModuleKind m, int n);

/// Matrix of the so(n)-action of the skew matrix x on the module, in the
/// orthonormal coordinate bases (e_i / sorted triples / pair-major slots).
Eigen::SparseMatrix<double> rho_matrix(const Eigen::MatrixXd& x, ModuleKind m);

/// Casimir sum of rho(Y_a)^2 over an orthonormalized basis of h under
/// <X,Y> = 1/2 tr(X^T Y). Symmetric and negative semidefinite.
Eigen::MatrixXd casimir_matrix(const Subspace& h, ModuleKind m, int n);

/// max_a ||[C, rho(Y_a)]|| / ||C|| for the orthonormalized basis of h.
double casimir_commutation_residual(const Eigen::MatrixXd& cas, const Subspace& h,
                                    ModuleKind m, int n);

/// Dimension of the joint commutant {M : [A, M] = 0 for all A in actions}.
int commutant_dim_of_actions(const std::vector<Eigen::MatrixXd>& actions,
                             double rank_tol = kDefaultRankTol);

/// Dimension of {M : [rho(Y), M] = 0 for all Y in h} acting on R^n;
/// 1 means the module is irreducible of real type.
int commutant_dim_vector(const Subspace& h, int n, double rank_tol = kDefaultRankTol);

/// Push-forward of the tensor by an orthogonal matrix:
/// (R*Y)_ijk = sum R_ip R_jq R_kr Y_pqr.
UpsilonFloat rotate_upsilon(const UpsilonFloat& u, const Eigen::MatrixXd& r);
ThreeFormD rotate_threeform(const ThreeFormD& t, const Eigen::MatrixXd& r);

/// Dense n^3 component array of the symmetric tensor (row-major strides
/// n^2, n, 1); convenience for contraction-heavy paths.
std::vector<double> dense_sym3(const UpsilonFloat& u);

}  // namespace isocubic
