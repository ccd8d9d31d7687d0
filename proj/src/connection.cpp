#include "isocubic/connection.hpp"

#include <stdexcept>

namespace isocubic {

SplitContext::SplitContext(const UpsilonTensor& u, double rank_tol) : n_(u.n) {
  h_ = stabilizer_sym3(u, Mode::Float, rank_tol);
  Subspace hc = h_conn_basis(h_, n_);
  Subspace ec = lambda3_conn_subspace(n_);
  qh_ = hc.orthonormal_basis();
  qe_ = ec.orthonormal_basis();

  Subspace inter = subspace_intersection(hc, ec);
  v1_ = inter.orthonormal_basis();
  if (v1_.cols() > 0) {
    // remove the intersection from the torsion side to get a direct sum
    Eigen::MatrixXd resid = qe_ - v1_ * (v1_.transpose() * qe_);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(resid, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int keep = 0;
    for (int i = 0; i < sv.size(); ++i) {
      if (sv(i) > rank_tol * std::max(1.0, sv(0))) ++keep;
    }
    qe_reduced_ = svd.matrixU().leftCols(keep);
  } else {
    qe_reduced_ = qe_;
  }
  sum_basis_.resize(qh_.rows(), qh_.cols() + qe_reduced_.cols());
  sum_basis_ << qh_, qe_reduced_;
  solver_.compute(sum_basis_);
}

ConnElement SplitResult::reconstruct() const {
  ConnElement out = gamma;
  out.comps += 0.5 * embed_lambda3(torsion).comps + residual.comps;
  return out;
}

SplitResult split(const ConnElement& c, const SplitContext& ctx) {
  if (c.n != ctx.n()) throw std::invalid_argument("split: dimension mismatch");
  const Eigen::MatrixXd& qh = ctx.basis_h();
  const Eigen::MatrixXd& qe = ctx.basis_torsion();

  // least-squares coordinates on the direct sum qh (+) qe_reduced
  Eigen::VectorXd coef = ctx.solve_sum_coordinates(c.comps);
  Eigen::VectorXd gamma_part = qh * coef.head(qh.cols());
  Eigen::VectorXd torsion_part = qe * coef.tail(qe.cols());

  SplitResult res;
  res.ambiguity_dim = ctx.ambiguity_dim();
  res.gamma = ConnElement::zero(c.n);
  res.gamma.comps = gamma_part;
  ConnElement emb = ConnElement::zero(c.n);
  emb.comps = torsion_part;
  // the embedded part is 1/2 embed(T)
  emb.comps *= 2.0;
  res.torsion = unembed_conn(emb);
  res.residual = ConnElement::zero(c.n);
  res.residual.comps = c.comps - gamma_part - torsion_part;
  return res;
}

bool admits_characteristic(const ConnElement& c, const SplitContext& ctx,
                           const UpsilonFloat& u, double tol) {
  SplitResult res = split(c, ctx);
  if (res.residual.comps.norm() >= tol) return false;
  if (ctx.ambiguity_dim() > 0) {
    const Eigen::MatrixXd& v1 = ctx.intersection_basis();
    if ((v1.transpose() * c.comps).norm() >= tol) return false;
  }
  // A characteristic connection forces the defect to vanish; check it
  // rather than assume it.
  Sym4Tensor defect = nearly_integrable_defect(c, u);
  return defect.norm() <= 1e-9 * std::max(1.0, c.comps.norm());
}

namespace {

// exact dot product of conn-coordinate vectors
ScalarQ3 qdot(const QVec& a, const QVec& b) {
  ScalarQ3 acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

}  // namespace

ExactSplitResult split_exact(const QVec& conn, const UpsilonTensor& u) {
  const int n = u.n;
  if (n != 5 && n != 8) {
    throw std::invalid_argument("split_exact: exact path is provided for n = 5 and 8");
  }
  const int ambient = conn_space_dim(n);
  if (static_cast<int>(conn.size()) != ambient) {
    throw std::invalid_argument("split_exact: dimension mismatch");
  }

  const Subspace h = stabilizer_sym3(u, Mode::Exact);
  const Subspace hc = h_conn_basis(h, n);
  const std::vector<QVec>& bh = hc.basis_q;

  // exact embedded 3-form basis, one column per sorted triple
  const auto& triples = sorted_triples(n);
  std::vector<QVec> be;
  be.reserve(triples.size());
  for (const auto& t : triples) {
    QVec col(ambient, ScalarQ3());
    col[conn_index(t[0], t[1], t[2], n)] = ScalarQ3(1);
    col[conn_index(t[0], t[2], t[1], n)] = ScalarQ3(-1);
    col[conn_index(t[1], t[2], t[0], n)] = ScalarQ3(1);
    be.push_back(std::move(col));
  }

  // intersection line (dimension 8 only)
  Subspace ec = Subspace::from_exact(ambient, be);
  Subspace inter = subspace_intersection(hc, ec);
  const int ambiguity = inter.dim();

  // full-rank spanning subset of [bh | be]: pivot columns of the row-reduced
  // concatenation
  const int total_cols = static_cast<int>(bh.size() + be.size());
  QMat m(ambient, QVec(total_cols, ScalarQ3()));
  for (int c = 0; c < static_cast<int>(bh.size()); ++c) {
    for (int r = 0; r < ambient; ++r) m[r][c] = bh[c][r];
  }
  for (int c = 0; c < static_cast<int>(be.size()); ++c) {
    for (int r = 0; r < ambient; ++r) m[r][bh.size() + c] = be[c][r];
  }
  const std::vector<int> keep = exact_pivot_columns(m);

  // exact least squares: normal equations on the independent columns
  const int k = static_cast<int>(keep.size());
  std::vector<QVec> cols(k, QVec(ambient));
  for (int c = 0; c < k; ++c) {
    for (int r = 0; r < ambient; ++r) cols[c][r] = m[r][keep[c]];
  }
  QMat gram(k, QVec(k, ScalarQ3()));
  QVec rhs(k, ScalarQ3());
  for (int a = 0; a < k; ++a) {
    rhs[a] = qdot(cols[a], conn);
    for (int b = 0; b <= a; ++b) {
      gram[a][b] = gram[b][a] = qdot(cols[a], cols[b]);
    }
  }
  auto coef = exact_solve(std::move(gram), std::move(rhs));
  if (!coef) throw std::logic_error("split_exact: singular normal equations");

  QVec proj(ambient, ScalarQ3());
  for (int c = 0; c < k; ++c) {
    if ((*coef)[c].is_zero()) continue;
    for (int r = 0; r < ambient; ++r) proj[r] += (*coef)[c] * cols[c][r];
  }

  // decompose the projection along the two summands with the convention
  // that the embedded part is orthogonal to the intersection line
  QMat sys(ambient + ambiguity, QVec(total_cols, ScalarQ3()));
  QVec sys_rhs(ambient + ambiguity, ScalarQ3());
  for (int r = 0; r < ambient; ++r) {
    sys[r] = m[r];
    sys_rhs[r] = proj[r];
  }
  if (ambiguity > 0) {
    const QVec& v1 = inter.basis_q[0];
    for (int c = 0; c < static_cast<int>(be.size()); ++c) {
      sys[ambient][bh.size() + c] = qdot(v1, be[c]);
    }
  }
  auto xy = exact_solve(std::move(sys), std::move(sys_rhs));
  if (!xy) throw std::logic_error("split_exact: inconsistent decomposition system");

  ExactSplitResult out;
  out.ambiguity_dim = ambiguity;
  out.gamma.assign(ambient, ScalarQ3());
  for (int c = 0; c < static_cast<int>(bh.size()); ++c) {
    if ((*xy)[c].is_zero()) continue;
    for (int r = 0; r < ambient; ++r) out.gamma[r] += (*xy)[c] * bh[c][r];
  }
  out.torsion.n = n;
  const ScalarQ3 two(2);
  for (int c = 0; c < static_cast<int>(be.size()); ++c) {
    const ScalarQ3& y = (*xy)[bh.size() + c];
    if (y.is_zero()) continue;
    const auto& t = triples[c];
    out.torsion.entries[{t[0] + 1, t[1] + 1, t[2] + 1}] = two * y;
  }
  out.residual.assign(ambient, ScalarQ3());
  for (int r = 0; r < ambient; ++r) out.residual[r] = conn[r] - proj[r];
  return out;
}

}  // namespace isocubic
