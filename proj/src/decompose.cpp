#include "isocubic/decompose.hpp"

#include "isocubic/cubic_form.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace isocubic {

std::vector<int> DecompositionReport::dims_desc() const {
  std::vector<int> dims;
  dims.reserve(components.size());
  for (const auto& c : components) dims.push_back(c.dim);
  std::sort(dims.rbegin(), dims.rend());
  return dims;
}

bool irrep_dim_matches(int n, int dim) {
  switch (n) {
    case 5:
      return dim % 2 == 1;
    case 8: {
      static const int list[] = {1, 8, 20, 27, 70};
      return std::find(std::begin(list), std::end(list), dim) != std::end(list);
    }
    case 14: {
      static const int list[] = {1, 14, 21, 70, 84, 90, 126, 189, 512, 525};
      return std::find(std::begin(list), std::end(list), dim) != std::end(list);
    }
    case 26: {
      static const int list[] = {1, 26, 52, 273, 324, 1053, 1274, 4096, 8424};
      return std::find(std::begin(list), std::end(list), dim) != std::end(list);
    }
    default:
      return false;
  }
}

namespace {

struct ClusterBounds {
  std::vector<std::pair<int, int>> ranges;  // [first, last] eigenvalue indices
};

ClusterBounds cluster_eigenvalues(const Eigen::VectorXd& ev, double cluster_tol) {
  ClusterBounds cb;
  const int m = static_cast<int>(ev.size());
  if (m == 0) return cb;
  const double scale = std::max(1.0, std::max(std::abs(ev(0)), std::abs(ev(m - 1))));
  const double gap = cluster_tol * scale;
  int start = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || ev(i) - ev(i - 1) > gap) {
      cb.ranges.emplace_back(start, i - 1);
      start = i;
    }
  }
  return cb;
}

DecompositionReport report_from_eigenvalues(const Eigen::VectorXd& ev, ModuleKind module,
                                            int n, double cluster_tol,
                                            ClusterBounds* bounds_out) {
  DecompositionReport report;
  report.module_label = std::string(module_name(module)) + "(R^" + std::to_string(n) + ")";
  report.total_dim = static_cast<int>(ev.size());
  ClusterBounds cb = cluster_eigenvalues(ev, cluster_tol);
  for (const auto& [first, last] : cb.ranges) {
    IsotypicComponent comp;
    comp.dim = last - first + 1;
    comp.casimir_eigenvalue = ev.segment(first, comp.dim).mean();
    if (irrep_dim_matches(n, comp.dim)) comp.matched_irrep_dim = comp.dim;
    report.components.push_back(comp);
  }
  if (bounds_out) *bounds_out = std::move(cb);
  return report;
}

}  // namespace

DecompositionReport isotypic(const Subspace& h, ModuleKind module, int n,
                             double cluster_tol, bool slow_profile) {
  if (module == ModuleKind::Conn && n == 26 && !slow_profile) {
    throw std::invalid_argument(
        "module too large: conn at dim 26 (8450-dimensional eigensolve) needs the "
        "slow profile");
  }
  Eigen::MatrixXd cas = casimir_matrix(h, module, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cas, Eigen::EigenvaluesOnly);
  return report_from_eigenvalues(es.eigenvalues(), module, n, cluster_tol, nullptr);
}

IsotypicSplit isotypic_split(const Subspace& h, ModuleKind module, int n,
                             double cluster_tol) {
  Eigen::MatrixXd cas = casimir_matrix(h, module, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cas);
  ClusterBounds cb;
  IsotypicSplit split;
  split.report = report_from_eigenvalues(es.eigenvalues(), module, n, cluster_tol, &cb);
  for (const auto& [first, last] : cb.ranges) {
    split.bases.push_back(es.eigenvectors().middleCols(first, last - first + 1));
  }
  return split;
}

double adjoint_casimir_eigenvalue(const Subspace& h, int n) {
  Eigen::MatrixXd q = h.orthonormal_basis();
  const int dim = static_cast<int>(q.cols());
  std::vector<Eigen::MatrixXd> mats(dim);
  for (int c = 0; c < dim; ++c) mats[c] = skew_from_coords(q.col(c), n);
  Eigen::MatrixXd cas = Eigen::MatrixXd::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    // ad_{Y_a} in the orthonormal coordinates of h
    Eigen::MatrixXd ad(dim, dim);
    for (int b = 0; b < dim; ++b) {
      ad.col(b) = q.transpose() * coords_from_skew(bracket(mats[a], mats[b]));
    }
    cas += ad * ad;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cas, Eigen::EigenvaluesOnly);
  return es.eigenvalues().mean();
}

std::vector<int> component_commutant_dims(const Subspace& h, ModuleKind module, int n,
                                          double cluster_tol, double rank_tol) {
  if (module_dim(module, n) > 400) {
    throw std::invalid_argument(
        "commutant analysis is offered for modules of dimension <= 400");
  }
  IsotypicSplit split = isotypic_split(h, module, n, cluster_tol);
  Eigen::MatrixXd q = h.orthonormal_basis();
  std::vector<Eigen::SparseMatrix<double>> rhos;
  rhos.reserve(static_cast<std::size_t>(q.cols()));
  for (int c = 0; c < q.cols(); ++c) {
    rhos.push_back(rho_matrix(skew_from_coords(q.col(c), n), module));
  }
  std::vector<int> dims;
  dims.reserve(split.bases.size());
  for (const Eigen::MatrixXd& basis : split.bases) {
    std::vector<Eigen::MatrixXd> restricted;
    restricted.reserve(rhos.size());
    for (const auto& rho : rhos) {
      restricted.push_back(basis.transpose() * (rho * basis));
    }
    dims.push_back(commutant_dim_of_actions(restricted, rank_tol));
  }
  return dims;
}

ConnElement embed_lambda3(const ThreeFormD& t) {
  ConnElement c = ConnElement::zero(t.n);
  for (const auto& [idx, v] : t.entries) {
    const int i = idx[0], j = idx[1], k = idx[2];
    c.at(i, j, k) += v;
    c.at(i, k, j) -= v;
    c.at(j, k, i) += v;
  }
  return c;
}

ThreeFormD unembed_conn(const ConnElement& c) {
  ThreeFormD t;
  t.n = c.n;
  for (const auto& idx : sorted_triples(c.n)) {
    double v = c.at(idx[0], idx[1], idx[2]);
    if (v != 0.0) t.entries[idx] = v;
  }
  return t;
}

namespace {

// Singular values of Qu^T Qv are the cosines of the principal angles.
Eigen::VectorXd principal_cosines(const Eigen::MatrixXd& qu, const Eigen::MatrixXd& qv) {
  if (qu.cols() == 0 || qv.cols() == 0) return Eigen::VectorXd();
  Eigen::MatrixXd m = qu.transpose() * qv;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues();
}

double near_one_threshold(double rank_tol) {
  return std::max(2.0 * rank_tol * rank_tol, 1e-12);
}

}  // namespace

int subspace_sum_dim(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient) throw std::invalid_argument("subspace_sum_dim: ambient mismatch");
  if (u.mode != v.mode) throw std::invalid_argument("subspace_sum_dim: mode mismatch");
  if (u.mode == Mode::Exact) {
    // rank of the concatenated column set = rank of the transpose
    QMat m;
    m.reserve(u.basis_q.size() + v.basis_q.size());
    for (const auto& b : u.basis_q) m.push_back(b);
    for (const auto& b : v.basis_q) m.push_back(b);
    return exact_rank_inplace(m);
  }
  Eigen::MatrixXd qu = u.orthonormal_basis();
  Eigen::MatrixXd qv = v.orthonormal_basis();
  Eigen::VectorXd cos = principal_cosines(qu, qv);
  const double thr = 1.0 - near_one_threshold(std::max(u.rank_tol, v.rank_tol));
  int common = 0;
  for (int i = 0; i < cos.size(); ++i) {
    if (cos(i) >= thr) ++common;
  }
  return static_cast<int>(qu.cols() + qv.cols()) - common;
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient != v.ambient)
    throw std::invalid_argument("subspace_intersection: ambient mismatch");
  if (u.mode != v.mode) throw std::invalid_argument("subspace_intersection: mode mismatch");

  if (u.mode == Mode::Exact) {
    // nullspace of [Bu | -Bv] (columns), ambient rows
    const int du = static_cast<int>(u.basis_q.size());
    const int dv = static_cast<int>(v.basis_q.size());
    QMat m(u.ambient, QVec(du + dv, ScalarQ3()));
    for (int c = 0; c < du; ++c) {
      for (int r = 0; r < u.ambient; ++r) m[r][c] = u.basis_q[c][r];
    }
    for (int c = 0; c < dv; ++c) {
      for (int r = 0; r < u.ambient; ++r) m[r][du + c] = -v.basis_q[c][r];
    }
    std::vector<QVec> null = exact_nullspace(std::move(m));
    std::vector<QVec> basis;
    for (const auto& nv : null) {
      QVec w(u.ambient, ScalarQ3());
      bool nonzero = false;
      for (int c = 0; c < du; ++c) {
        if (nv[c].is_zero()) continue;
        for (int r = 0; r < u.ambient; ++r) {
          w[r] += nv[c] * u.basis_q[c][r];
          }
        nonzero = true;
      }
      if (nonzero) basis.push_back(std::move(w));
    }
    return Subspace::from_exact(u.ambient, std::move(basis));
  }

  Eigen::MatrixXd qu = u.orthonormal_basis();
  Eigen::MatrixXd qv = v.orthonormal_basis();
  if (qu.cols() == 0 || qv.cols() == 0) {
    return Subspace::from_float(u.ambient, Eigen::MatrixXd(u.ambient, 0), u.rank_tol);
  }
  Eigen::MatrixXd m = qu.transpose() * qv;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double thr = 1.0 - near_one_threshold(std::max(u.rank_tol, v.rank_tol));
  int common = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) >= thr) ++common;
  }
  Eigen::MatrixXd basis = qu * svd.matrixU().leftCols(common);
  return Subspace::from_float(u.ambient, std::move(basis), u.rank_tol);
}

Subspace h_conn_basis(const Subspace& h, int n) {
  const int ambient = conn_space_dim(n);
  if (h.mode == Mode::Exact) {
    std::vector<QVec> basis;
    basis.reserve(h.basis_q.size() * static_cast<std::size_t>(n));
    for (const auto& y : h.basis_q) {
      for (int l = 0; l < n; ++l) {
        QVec w(ambient, ScalarQ3());
        for (int p = 0; p < so_dim(n); ++p) w[p * n + l] = y[p];
        basis.push_back(std::move(w));
      }
    }
    return Subspace::from_exact(ambient, std::move(basis));
  }
  Eigen::MatrixXd basis(ambient, h.dim() * n);
  basis.setZero();
  int col = 0;
  for (int c = 0; c < h.dim(); ++c) {
    for (int l = 0; l < n; ++l, ++col) {
      for (int p = 0; p < so_dim(n); ++p) basis(p * n + l, col) = h.basis_f(p, c);
    }
  }
  return Subspace::from_float(ambient, std::move(basis), h.rank_tol);
}

Subspace lambda3_conn_subspace(int n) {
  const int ambient = conn_space_dim(n);
  const auto& triples = sorted_triples(n);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(ambient, static_cast<int>(triples.size()));
  int col = 0;
  for (const auto& t : triples) {
    ThreeFormD f;
    f.n = n;
    f.entries[t] = 1.0;
    basis.col(col++) = embed_lambda3(f).comps;
  }
  return Subspace::from_float(ambient, std::move(basis));
}

ComponentCounts restricted_component_counts(int n, double rank_tol) {
  if (!is_supported_dim(n)) {
    throw std::invalid_argument("unsupported dimension " + std::to_string(n));
  }
  const UpsilonTensor u = upsilon_from_cubic(n);
  const Subspace h = stabilizer_sym3(u, Mode::Float, rank_tol);
  const int hd = h.dim();
  const auto& triples = sorted_triples(n);
  const int ld = static_cast<int>(triples.size());

  // Cross-Gram of the two internally orthonormal bases:
  // rows (a, l) over h-basis x frame, cols sorted triples (i<j<k)/sqrt3.
  Eigen::MatrixXd m(hd * n, ld);
  const double inv_s3 = 1.0 / std::sqrt(3.0);
  for (int a = 0; a < hd; ++a) {
    for (int l = 0; l < n; ++l) {
      const int row = a * n + l;
      for (int t = 0; t < ld; ++t) {
        const int i = triples[t][0], j = triples[t][1], k = triples[t][2];
        double acc = 0.0;
        if (l == k) acc += h.basis_f(pair_index(i, j, n), a);
        if (l == j) acc -= h.basis_f(pair_index(i, k, n), a);
        if (l == i) acc += h.basis_f(pair_index(j, k, n), a);
        m(row, t) = acc * inv_s3;
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double thr = 1.0 - near_one_threshold(rank_tol);
  int inter = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) >= thr) ++inter;
  }
  ComponentCounts counts;
  counts.total = conn_space_dim(n);
  counts.intersection_dim = inter;
  counts.restricted = hd * n + ld - inter - (n == 8 ? 1 : 0);
  return counts;
}

}  // namespace isocubic
