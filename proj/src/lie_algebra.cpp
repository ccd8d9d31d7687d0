#include "isocubic/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isocubic {

namespace {

// Sign of the permutation sorting (i,j,k); 0 on repeated indices.
int alt_sign(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (i == j || j == k) return 0;
  return sign;
}

Eigen::MatrixXd orthonormalize_columns(const Eigen::MatrixXd& b) {
  if (b.cols() == 0) return b;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(b.rows(), b.cols());
  return q;
}

}  // namespace

Subspace Subspace::from_float(int ambient, Eigen::MatrixXd basis, double rank_tol) {
  Subspace s;
  s.ambient = ambient;
  s.mode = Mode::Float;
  s.basis_f = std::move(basis);
  s.rank_tol = rank_tol;
  return s;
}

Subspace Subspace::from_exact(int ambient, std::vector<QVec> basis) {
  Subspace s;
  s.ambient = ambient;
  s.mode = Mode::Exact;
  s.basis_q = std::move(basis);
  return s;
}

Eigen::MatrixXd Subspace::float_basis() const {
  if (mode == Mode::Float) return basis_f;
  Eigen::MatrixXd b(ambient, static_cast<int>(basis_q.size()));
  for (int c = 0; c < b.cols(); ++c) {
    for (int r = 0; r < ambient; ++r) b(r, c) = basis_q[c][r].to_double();
  }
  return b;
}

Eigen::MatrixXd Subspace::orthonormal_basis() const {
  return orthonormalize_columns(float_basis());
}

Eigen::MatrixXd Subspace::projector() const {
  Eigen::MatrixXd q = orthonormal_basis();
  return q * q.transpose();
}

double ThreeFormD::get(int i, int j, int k) const {
  int sign = alt_sign(i, j, k);
  if (sign == 0) return 0.0;
  auto it = entries.find({i, j, k});
  return it == entries.end() ? 0.0 : sign * it->second;
}

void ThreeFormD::set_sorted(int i, int j, int k, double v) {
  if (!(i < j && j < k)) throw std::invalid_argument("set_sorted: indices not increasing");
  if (v == 0.0) {
    entries.erase({i, j, k});
  } else {
    entries[{i, j, k}] = v;
  }
}

Eigen::VectorXd ThreeFormD::to_vector() const {
  const auto& triples = sorted_triples(n);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<int>(triples.size()));
  for (const auto& [t, val] : entries) {
    v[triple_index(t[0], t[1], t[2], n)] = val;
  }
  return v;
}

ThreeFormD ThreeFormD::from_vector(int n_, const Eigen::VectorXd& v) {
  ThreeFormD t;
  t.n = n_;
  const auto& triples = sorted_triples(n_);
  for (std::size_t idx = 0; idx < triples.size(); ++idx) {
    if (v[static_cast<int>(idx)] != 0.0) {
      t.entries[triples[idx]] = v[static_cast<int>(idx)];
    }
  }
  return t;
}

double ThreeFormD::norm() const {
  double s = 0.0;
  for (const auto& [t, v] : entries) s += v * v;
  return std::sqrt(s);
}

ScalarQ3 ThreeFormQ::get(int i, int j, int k) const {
  int sign = alt_sign(i, j, k);
  if (sign == 0) return ScalarQ3();
  auto it = entries.find({i, j, k});
  if (it == entries.end()) return ScalarQ3();
  return sign > 0 ? it->second : -it->second;
}

ThreeFormD ThreeFormQ::to_float() const {
  ThreeFormD t;
  t.n = n;
  for (const auto& [idx, v] : entries) {
    t.entries[{idx[0] - 1, idx[1] - 1, idx[2] - 1}] = v.to_double();
  }
  return t;
}

double Sym3Tensor::get(int i, int j, int k) const {
  std::array<int, 3> t = {i, j, k};
  std::sort(t.begin(), t.end());
  auto it = entries.find(t);
  return it == entries.end() ? 0.0 : it->second;
}

double Sym3Tensor::norm() const {
  double s = 0.0;
  for (const auto& [t, v] : entries) s += multinomial_count3(t) * v * v;
  return std::sqrt(s);
}

bool Sym3Tensor::is_zero(double tol) const {
  for (const auto& [t, v] : entries) {
    if (std::abs(v) > tol) return false;
  }
  return true;
}

std::vector<Eigen::MatrixXd> so_basis(int n) {
  std::vector<Eigen::MatrixXd> basis;
  basis.reserve(static_cast<std::size_t>(so_dim(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(a, b) = 1.0;
      e(b, a) = -1.0;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

Eigen::MatrixXd skew_from_coords(const Eigen::VectorXd& coords, int n) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  int idx = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++idx) {
      x(a, b) = coords[idx];
      x(b, a) = -coords[idx];
    }
  }
  return x;
}

Eigen::VectorXd coords_from_skew(const Eigen::MatrixXd& x) {
  const int n = static_cast<int>(x.rows());
  Eigen::VectorXd coords(so_dim(n));
  int idx = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++idx) coords[idx] = x(a, b);
  }
  return coords;
}

Eigen::MatrixXd bracket(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  return x * y - y * x;
}

Sym3Tensor act_sym3(const Eigen::MatrixXd& x, const UpsilonFloat& u) {
  const int n = u.n;
  if (x.rows() != n || x.cols() != n) throw std::invalid_argument("act_sym3: dimension mismatch");
  std::vector<double> dense = dense_sym3(u);
  auto val = [&](int i, int j, int k) { return dense[(i * n + j) * n + k]; };
  Sym3Tensor out;
  out.n = n;
  for (const auto& t : symmetric_triples(n)) {
    const int i = t[0], j = t[1], k = t[2];
    double acc = 0.0;
    for (int m = 0; m < n; ++m) {
      acc += x(m, i) * val(m, j, k) + x(m, j) * val(i, m, k) + x(m, k) * val(i, j, m);
    }
    if (acc != 0.0) out.entries[t] = acc;
  }
  return out;
}

ThreeFormD act_lambda3(const Eigen::MatrixXd& x, const ThreeFormD& t) {
  const int n = t.n;
  if (x.rows() != n) throw std::invalid_argument("act_lambda3: dimension mismatch");
  ThreeFormD out;
  out.n = n;
  for (const auto& idx : sorted_triples(n)) {
    const int i = idx[0], j = idx[1], k = idx[2];
    double acc = 0.0;
    for (int m = 0; m < n; ++m) {
      acc += x(m, i) * t.get(m, j, k) + x(m, j) * t.get(i, m, k) + x(m, k) * t.get(i, j, m);
    }
    if (acc != 0.0) out.entries[idx] = acc;
  }
  return out;
}

std::vector<double> dense_sym3(const UpsilonFloat& u) {
  const int n = u.n;
  std::vector<double> dense(static_cast<std::size_t>(n) * n * n, 0.0);
  for (const auto& e : u.entries) {
    int p[3] = {e.i, e.j, e.k};
    std::sort(p, p + 3);
    do {
      dense[(static_cast<std::size_t>(p[0]) * n + p[1]) * n + p[2]] = e.v;
    } while (std::next_permutation(p, p + 3));
  }
  return dense;
}

namespace {

// Float nullspace of a dense map via SVD: columns of V for singular values
// below rank_tol * sigma_max (with an eps floor).
Eigen::MatrixXd svd_nullspace(const Eigen::MatrixXd& m, double rank_tol) {
  if (m.cols() == 0) return Eigen::MatrixXd(m.cols(), 0);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  const double thr = std::max(rank_tol, 8 * eps * std::max(m.rows(), m.cols())) * smax;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++rank;
  }
  const int null_dim = static_cast<int>(m.cols()) - rank;
  return svd.matrixV().rightCols(null_dim);
}

}  // namespace

Subspace stabilizer_sym3(const UpsilonTensor& u, Mode mode, double rank_tol) {
  const int n = u.n;
  const int cols = so_dim(n);
  const auto triples = symmetric_triples(n);

  if (mode == Mode::Exact) {
    QMat m(triples.size(), QVec(cols, ScalarQ3()));
    int col = 0;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b, ++col) {
        for (std::size_t r = 0; r < triples.size(); ++r) {
          const int i = triples[r][0] + 1, j = triples[r][1] + 1, k = triples[r][2] + 1;
          ScalarQ3 acc;
          // X = E_ab: sum_m X_mi Y_mjk = [i==b] Y_ajk - [i==a] Y_bjk
          if (i == b) acc += u.get(a, j, k);
          if (i == a) acc -= u.get(b, j, k);
          if (j == b) acc += u.get(i, a, k);
          if (j == a) acc -= u.get(i, b, k);
          if (k == b) acc += u.get(i, j, a);
          if (k == a) acc -= u.get(i, j, b);
          m[r][col] = acc;
        }
      }
    }
    return Subspace::from_exact(cols, exact_nullspace(std::move(m)));
  }

  const UpsilonFloat uf = UpsilonFloat::from(u);
  std::vector<double> dense = dense_sym3(uf);
  auto val = [&](int i, int j, int k) { return dense[(i * n + j) * n + k]; };
  Eigen::MatrixXd m(static_cast<int>(triples.size()), cols);
  int col = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++col) {
      for (std::size_t r = 0; r < triples.size(); ++r) {
        const int i = triples[r][0], j = triples[r][1], k = triples[r][2];
        double acc = 0.0;
        if (i == b) acc += val(a, j, k);
        if (i == a) acc -= val(b, j, k);
        if (j == b) acc += val(i, a, k);
        if (j == a) acc -= val(i, b, k);
        if (k == b) acc += val(i, j, a);
        if (k == a) acc -= val(i, j, b);
        m(static_cast<int>(r), col) = acc;
      }
    }
  }
  return Subspace::from_float(cols, svd_nullspace(m, rank_tol), rank_tol);
}

Subspace stabilizer_lambda3(const ThreeFormD& t, double rank_tol) {
  const int n = t.n;
  const int cols = so_dim(n);
  const auto& triples = sorted_triples(n);
  Eigen::MatrixXd m(static_cast<int>(triples.size()), cols);
  int col = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++col) {
      for (std::size_t r = 0; r < triples.size(); ++r) {
        const int i = triples[r][0], j = triples[r][1], k = triples[r][2];
        double acc = 0.0;
        if (i == b) acc += t.get(a, j, k);
        if (i == a) acc -= t.get(b, j, k);
        if (j == b) acc += t.get(i, a, k);
        if (j == a) acc -= t.get(i, b, k);
        if (k == b) acc += t.get(i, j, a);
        if (k == a) acc -= t.get(i, j, b);
        m(static_cast<int>(r), col) = acc;
      }
    }
  }
  return Subspace::from_float(cols, svd_nullspace(m, rank_tol), rank_tol);
}

Subspace stabilizer_lambda3_exact(const ThreeFormQ& t) {
  const int n = t.n;
  const int cols = so_dim(n);
  const auto& triples = sorted_triples(n);
  QMat m(triples.size(), QVec(cols, ScalarQ3()));
  int col = 0;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b, ++col) {
      for (std::size_t r = 0; r < triples.size(); ++r) {
        const int i = triples[r][0] + 1, j = triples[r][1] + 1, k = triples[r][2] + 1;
        ScalarQ3 acc;
        if (i == b) acc += t.get(a, j, k);
        if (i == a) acc -= t.get(b, j, k);
        if (j == b) acc += t.get(i, a, k);
        if (j == a) acc -= t.get(i, b, k);
        if (k == b) acc += t.get(i, j, a);
        if (k == a) acc -= t.get(i, j, b);
        m[r][col] = acc;
      }
    }
  }
  return Subspace::from_exact(cols, exact_nullspace(std::move(m)));
}

bool bracket_closure_check(const Subspace& s, int n, double tol) {
  if (s.ambient != so_dim(n)) {
    throw std::invalid_argument("bracket_closure_check: subspace is not in so(n)");
  }
  if (s.dim() == 0) return true;

  if (s.mode == Mode::Exact) {
    // membership via exact solve against the basis matrix (columns = basis)
    QMat cols_mat(s.ambient, QVec(s.basis_q.size(), ScalarQ3()));
    for (std::size_t c = 0; c < s.basis_q.size(); ++c) {
      for (int r = 0; r < s.ambient; ++r) cols_mat[r][c] = s.basis_q[c][r];
    }
    // exact skew matrices
    auto to_matrix = [&](const QVec& coords) {
      std::vector<QVec> x(n, QVec(n, ScalarQ3()));
      int idx = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b, ++idx) {
          x[a][b] = coords[idx];
          x[b][a] = -coords[idx];
        }
      }
      return x;
    };
    for (std::size_t p = 0; p < s.basis_q.size(); ++p) {
      auto xp = to_matrix(s.basis_q[p]);
      for (std::size_t q = p + 1; q < s.basis_q.size(); ++q) {
        auto xq = to_matrix(s.basis_q[q]);
        QVec br(so_dim(n), ScalarQ3());
        int idx = 0;
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b, ++idx) {
            ScalarQ3 acc;
            for (int m = 0; m < n; ++m) acc += xp[a][m] * xq[m][b] - xq[a][m] * xp[m][b];
            br[idx] = acc;
          }
        }
        if (!exact_solve(cols_mat, br).has_value()) return false;
      }
    }
    return true;
  }

  Eigen::MatrixXd q = s.orthonormal_basis();
  const int dim = static_cast<int>(q.cols());
  std::vector<Eigen::MatrixXd> mats(dim);
  for (int c = 0; c < dim; ++c) mats[c] = skew_from_coords(q.col(c), n);
  for (int p = 0; p < dim; ++p) {
    for (int r = p + 1; r < dim; ++r) {
      Eigen::VectorXd br = coords_from_skew(bracket(mats[p], mats[r]));
      Eigen::VectorXd res = br - q * (q.transpose() * br);
      if (res.norm() > tol * std::max(1.0, br.norm())) return false;
    }
  }
  return true;
}

const char* module_name(ModuleKind m) {
  switch (m) {
    case ModuleKind::Vector: return "vector";
    case ModuleKind::Lambda3: return "lambda3";
    case ModuleKind::Conn: return "conn";
  }
  return "?";
}

int module_dim(ModuleKind m, int n) {
  switch (m) {
    case ModuleKind::Vector: return n;
    case ModuleKind::Lambda3: return lambda3_dim(n);
    case ModuleKind::Conn: return conn_space_dim(n);
  }
  return 0;
}

Eigen::SparseMatrix<double> rho_matrix(const Eigen::MatrixXd& x, ModuleKind m) {
  const int n = static_cast<int>(x.rows());
  const int dim = module_dim(m, n);
  std::vector<Eigen::Triplet<double>> trips;

  if (m == ModuleKind::Vector) {
    for (int c = 0; c < n; ++c) {
      for (int r = 0; r < n; ++r) {
        if (x(r, c) != 0.0) trips.emplace_back(r, c, x(r, c));
      }
    }
  } else if (m == ModuleKind::Lambda3) {
    const auto& triples = sorted_triples(n);
    // action on the basis form e_{pqr}: X.e_pqr = sum_m [X_mp e_mqr + ...]
    for (std::size_t c = 0; c < triples.size(); ++c) {
      const int p = triples[c][0], q = triples[c][1], r = triples[c][2];
      auto scatter = [&](int i, int j, int k, double coef) {
        int sign = alt_sign(i, j, k);
        if (sign == 0 || coef == 0.0) return;
        trips.emplace_back(triple_index(i, j, k, n), static_cast<int>(c), sign * coef);
      };
      for (int mm = 0; mm < n; ++mm) {
        scatter(mm, q, r, x(mm, p));
        scatter(p, mm, r, x(mm, q));
        scatter(p, q, mm, x(mm, r));
      }
    }
  } else {
    // conn: X.(E_cd (x) e_f) = [X, E_cd] (x) e_f + E_cd (x) X e_f
    for (int c = 0; c < n; ++c) {
      for (int d = c + 1; d < n; ++d) {
        for (int f = 0; f < n; ++f) {
          const int col = conn_index(c, d, f, n);
          // [X, E_cd]_{ab} = X_ac delta_db - X_ad delta_cb - delta_ac X_db + delta_ad X_cb
          for (int a = 0; a < n; ++a) {
            if (a != d) {
              // pair (a, d) entry gets X_ac; canonicalize a < d ordering
              double v = x(a, c);
              if (v != 0.0) {
                int lo = std::min(a, d), hi = std::max(a, d);
                trips.emplace_back(conn_index(lo, hi, f, n), col, a < d ? v : -v);
              }
            }
            if (a != c) {
              double v = -x(a, d);
              if (v != 0.0) {
                int lo = std::min(a, c), hi = std::max(a, c);
                trips.emplace_back(conn_index(lo, hi, f, n), col, a < c ? v : -v);
              }
            }
          }
          // slice mixing: E_cd (x) (X e_f) adds X_lf at (c,d,l)
          for (int l = 0; l < n; ++l) {
            if (x(l, f) != 0.0) trips.emplace_back(conn_index(c, d, l, n), col, x(l, f));
          }
        }
      }
    }
  }

  Eigen::SparseMatrix<double> rho(dim, dim);
  rho.setFromTriplets(trips.begin(), trips.end());
  return rho;
}

Eigen::MatrixXd casimir_matrix(const Subspace& h, ModuleKind m, int n) {
  const int dim = module_dim(m, n);
  Eigen::MatrixXd cas = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::MatrixXd q = h.orthonormal_basis();
  for (int c = 0; c < q.cols(); ++c) {
    Eigen::SparseMatrix<double> rho = rho_matrix(skew_from_coords(q.col(c), n), m);
    // cas += rho * rho, walked column-by-column to avoid sparse products
    for (int col = 0; col < dim; ++col) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(rho, col); it; ++it) {
        const double v1 = it.value();
        for (Eigen::SparseMatrix<double>::InnerIterator it2(rho, static_cast<int>(it.row()));
             it2; ++it2) {
          cas(it2.row(), col) += it2.value() * v1;
        }
      }
    }
  }
  // symmetrize away round-off
  cas = 0.5 * (cas + cas.transpose()).eval();
  return cas;
}

double casimir_commutation_residual(const Eigen::MatrixXd& cas, const Subspace& h,
                                    ModuleKind m, int n) {
  Eigen::MatrixXd q = h.orthonormal_basis();
  double worst = 0.0;
  const double scale = std::max(1.0, cas.norm());
  for (int c = 0; c < q.cols(); ++c) {
    Eigen::MatrixXd rho = Eigen::MatrixXd(rho_matrix(skew_from_coords(q.col(c), n), m));
    worst = std::max(worst, (cas * rho - rho * cas).norm() / scale);
  }
  return worst;
}

int commutant_dim_of_actions(const std::vector<Eigen::MatrixXd>& actions, double rank_tol) {
  if (actions.empty()) return 0;
  const int n = static_cast<int>(actions.front().rows());
  const int nn = n * n;
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nn, nn);
  for (const Eigen::MatrixXd& y : actions) {
    // vec([Y, M]) = (I (x) Y - Y^T (x) I) vec(M)
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nn, nn);
    for (int j = 0; j < n; ++j) {
      a.block(j * n, j * n, n, n) += y;
    }
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (y(j, i) != 0.0) {
          // -(Y^T (x) I): block (i, j) scaled by Y^T(i,j) = y(j,i)
          for (int d = 0; d < n; ++d) a(i * n + d, j * n + d) -= y(j, i);
        }
      }
    }
    gram += a.transpose() * a;
  }
  return nn - psd_rank(gram, rank_tol);
}

int commutant_dim_vector(const Subspace& h, int n, double rank_tol) {
  Eigen::MatrixXd q = h.orthonormal_basis();
  std::vector<Eigen::MatrixXd> actions;
  actions.reserve(static_cast<std::size_t>(q.cols()));
  for (int c = 0; c < q.cols(); ++c) actions.push_back(skew_from_coords(q.col(c), n));
  return commutant_dim_of_actions(actions, rank_tol);
}

UpsilonFloat rotate_upsilon(const UpsilonFloat& u, const Eigen::MatrixXd& r) {
  const int n = u.n;
  std::vector<double> dense = dense_sym3(u);
  auto val = [&](int p, int q, int s) { return dense[(p * n + q) * n + s]; };
  // contract one slot at a time
  std::vector<double> t1(dense.size(), 0.0), t2(dense.size(), 0.0);
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q)
      for (int s = 0; s < n; ++s) {
        double acc = 0.0;
        for (int p = 0; p < n; ++p) acc += r(i, p) * val(p, q, s);
        t1[(i * n + q) * n + s] = acc;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int s = 0; s < n; ++s) {
        double acc = 0.0;
        for (int q = 0; q < n; ++q) acc += r(j, q) * t1[(i * n + q) * n + s];
        t2[(i * n + j) * n + s] = acc;
      }
  UpsilonFloat out;
  out.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        double acc = 0.0;
        for (int s = 0; s < n; ++s) acc += r(k, s) * t2[(i * n + j) * n + s];
        if (acc != 0.0) out.entries.push_back({i, j, k, acc});
      }
  return out;
}

ThreeFormD rotate_threeform(const ThreeFormD& t, const Eigen::MatrixXd& r) {
  const int n = t.n;
  ThreeFormD out;
  out.n = n;
  for (const auto& idx : sorted_triples(n)) {
    double acc = 0.0;
    for (const auto& [src, v] : t.entries) {
      // sum over the 6 orderings of src with signs
      int p[3] = {src[0], src[1], src[2]};
      acc += v * (r(idx[0], p[0]) * (r(idx[1], p[1]) * r(idx[2], p[2]) -
                                     r(idx[1], p[2]) * r(idx[2], p[1])) -
                  r(idx[0], p[1]) * (r(idx[1], p[0]) * r(idx[2], p[2]) -
                                     r(idx[1], p[2]) * r(idx[2], p[0])) +
                  r(idx[0], p[2]) * (r(idx[1], p[0]) * r(idx[2], p[1]) -
                                     r(idx[1], p[1]) * r(idx[2], p[0])));
    }
    if (acc != 0.0) out.entries[idx] = acc;
  }
  return out;
}

}  // namespace isocubic
