#include "isocubic/upsilon.hpp"

#include "isocubic/exact_linalg.hpp"
#include "isocubic/polynomial.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace isocubic {

namespace {

std::array<int, 3> sorted3(int i, int j, int k) {
  std::array<int, 3> t = {i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

// Sparse rows Y_{pq, .}: for each sorted pair (p <= q), the list of
// (i, Y_pqi) with nonzero value. 1-based indices.
using PairRows = std::map<std::array<int, 2>, std::vector<std::pair<int, ScalarQ3>>>;

PairRows build_pair_rows(const UpsilonTensor& u) {
  PairRows rows;
  for (const auto& [t, v] : u.entries) {
    auto push = [&](int p, int q, int i) {
      std::array<int, 2> key = {std::min(p, q), std::max(p, q)};
      rows[key].emplace_back(i, v);
    };
    // distinct "remove one slot" choices of the sorted triple
    push(t[1], t[2], t[0]);
    if (t[1] != t[0]) push(t[0], t[2], t[1]);
    if (t[2] != t[1]) push(t[0], t[1], t[2]);
  }
  for (auto& [key, vec] : rows) {
    std::sort(vec.begin(), vec.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return rows;
}

ScalarQ3 sparse_dot(const std::vector<std::pair<int, ScalarQ3>>& a,
                    const std::vector<std::pair<int, ScalarQ3>>& b) {
  ScalarQ3 acc;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].first < b[ib].first) {
      ++ia;
    } else if (b[ib].first < a[ia].first) {
      ++ib;
    } else {
      acc += a[ia].second * b[ib].second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

const std::vector<std::pair<int, ScalarQ3>>& row_of(const PairRows& rows, int p, int q) {
  static const std::vector<std::pair<int, ScalarQ3>> empty;
  auto it = rows.find({std::min(p, q), std::max(p, q)});
  return it == rows.end() ? empty : it->second;
}

}  // namespace

ScalarQ3 UpsilonTensor::get(int i, int j, int k) const {
  auto it = entries.find(sorted3(i, j, k));
  return it == entries.end() ? ScalarQ3() : it->second;
}

void UpsilonTensor::set(std::array<int, 3> ijk, const ScalarQ3& v) {
  std::sort(ijk.begin(), ijk.end());
  if (v.is_zero()) {
    entries.erase(ijk);
  } else {
    entries[ijk] = v;
  }
}

ScalarQ3 UpsilonTensor::evaluate(std::span<const ScalarQ3> a) const {
  if (static_cast<int>(a.size()) != n) {
    throw std::invalid_argument("evaluate: point dimension mismatch");
  }
  ScalarQ3 acc;
  for (const auto& [t, v] : entries) {
    ScalarQ3 term = ScalarQ3(multinomial_count3(t)) * v;
    for (int idx : t) term *= a[static_cast<std::size_t>(idx - 1)];
    acc += term;
  }
  return acc;
}

UpsilonTensor UpsilonTensor::scaled(const ScalarQ3& s) const {
  UpsilonTensor out;
  out.n = n;
  if (s.is_zero()) return out;
  for (const auto& [t, v] : entries) out.entries.emplace(t, s * v);
  return out;
}

UpsilonFloat UpsilonFloat::from(const UpsilonTensor& u) {
  UpsilonFloat f;
  f.n = u.n;
  f.entries.reserve(u.entries.size());
  for (const auto& [t, v] : u.entries) {
    f.entries.push_back({t[0] - 1, t[1] - 1, t[2] - 1, v.to_double()});
  }
  return f;
}

double UpsilonFloat::evaluate(const Eigen::VectorXd& a) const {
  double acc = 0.0;
  for (const auto& e : entries) {
    acc += multinomial_count3({e.i, e.j, e.k}) * e.v * a[e.i] * a[e.j] * a[e.k];
  }
  return acc;
}

Eigen::VectorXd UpsilonFloat::gradient(const Eigen::VectorXd& a) const {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
  // grad_g F = 3 sum over ordered (p,q) of Y_gpq a_p a_q: for each distinct
  // derivative index of a sorted entry, the remaining pair contributes with
  // its own arrangement count (1 if equal, 2 otherwise).
  for (const auto& e : entries) {
    const int idx[3] = {e.i, e.j, e.k};
    for (int s = 0; s < 3; ++s) {
      if (s > 0 && idx[s] == idx[s - 1]) continue;
      int others[2], o = 0;
      for (int t = 0; t < 3; ++t) {
        if (t != s) others[o++] = idx[t];
      }
      const int arr = (others[0] == others[1]) ? 1 : 2;
      g[idx[s]] += 3.0 * arr * e.v * a[others[0]] * a[others[1]];
    }
  }
  return g;
}

Eigen::MatrixXd UpsilonFloat::hessian(const Eigen::VectorXd& a) const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  // Hess_ij = 6 Y_ijk a_k over ordered k
  for (const auto& e : entries) {
    const int idx[3] = {e.i, e.j, e.k};
    for (int s = 0; s < 3; ++s) {
      if (s > 0 && idx[s] == idx[s - 1]) continue;  // distinct "a_k" slot values
      int others[2], o = 0;
      for (int t = 0; t < 3; ++t) {
        if (t != s) others[o++] = idx[t];
      }
      double term = 6.0 * e.v * a[idx[s]];
      if (others[0] == others[1]) {
        h(others[0], others[1]) += term;
      } else {
        h(others[0], others[1]) += term;
        h(others[1], others[0]) += term;
      }
    }
  }
  return h;
}

bool IdentityReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

IdentityReport verify_identities(const UpsilonTensor& u) {
  IdentityReport report;
  report.n = u.n;
  const int n = u.n;

  auto timed = [&](const std::string& name, auto&& fn) {
    double t0 = now_ms();
    bool ok = fn();
    report.checks.push_back({name, ok, now_ms() - t0});
  };

  // i) total symmetry is structural: only sorted triples are stored
  timed("total_symmetry", [&] {
    for (const auto& [t, v] : u.entries) {
      if (!(t[0] <= t[1] && t[1] <= t[2]) || t[0] < 1 || t[2] > n) return false;
      if (v.is_zero()) return false;
    }
    return true;
  });

  // ii) trace-free: sum_j Y_ijj = 0 for every i
  timed("trace_free", [&] {
    for (int i = 1; i <= n; ++i) {
      ScalarQ3 s;
      for (int j = 1; j <= n; ++j) s += u.get(i, j, j);
      if (!s.is_zero()) return false;
    }
    return true;
  });

  // iii) quadratic identity on all sorted quadruples
  timed("quadratic_identity", [&] {
    const PairRows rows = build_pair_rows(u);
    for (int j = 1; j <= n; ++j) {
      for (int k = j; k <= n; ++k) {
        for (int l = k; l <= n; ++l) {
          for (int m = l; m <= n; ++m) {
            ScalarQ3 lhs = sparse_dot(row_of(rows, j, k), row_of(rows, l, m));
            lhs += sparse_dot(row_of(rows, l, j), row_of(rows, k, m));
            lhs += sparse_dot(row_of(rows, k, l), row_of(rows, j, m));
            long rhs = (j == k && l == m ? 1 : 0) + (l == j && k == m ? 1 : 0) +
                       (k == l && j == m ? 1 : 0);
            if (lhs != ScalarQ3(rhs)) return false;
          }
        }
      }
    }
    return true;
  });

  // Laplace(F) = 0: sum_i Y_iij = 0 for every j
  timed("harmonic", [&] {
    for (int j = 1; j <= n; ++j) {
      ScalarQ3 s;
      for (int i = 1; i <= n; ++i) s += u.get(i, i, j);
      if (!s.is_zero()) return false;
    }
    return true;
  });

  // |grad F|^2 = 9 |a|^4 as an exact polynomial identity
  timed("eikonal", [&] {
    ExactPoly f;
    for (const auto& [t, v] : u.entries) {
      f.add_term({t[0], t[1], t[2]}, ScalarQ3(multinomial_count3(t)) * v);
    }
    ExactPoly lhs;
    for (int i = 1; i <= n; ++i) {
      ExactPoly di = f.derivative(i);
      lhs += di * di;
    }
    ExactPoly norm2;
    for (int i = 1; i <= n; ++i) {
      ExactPoly ai = ExactPoly::variable(i);
      norm2 += ai * ai;
    }
    ExactPoly rhs = ScalarQ3(9) * (norm2 * norm2);
    return (lhs - rhs).is_zero();
  });

  return report;
}

ConnElement ConnElement::zero(int n_) {
  ConnElement c;
  c.n = n_;
  c.comps = Eigen::VectorXd::Zero(conn_space_dim(n_));
  return c;
}

Eigen::MatrixXd ConnElement::slice(int l) const {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      double v = comps[conn_index(a, b, l, n)];
      x(a, b) = v;
      x(b, a) = -v;
    }
  }
  return x;
}

double Sym4Tensor::norm() const {
  double s = 0.0;
  for (const auto& [q, v] : entries) {
    s += distinct_arrangements4(q) * v * v;
  }
  return std::sqrt(s);
}

namespace {

// Accumulates E_{l,i,j,k} = sum_m C_mi|l Y_mjk over all distinct ordered
// tuples into the symmetric accumulator, then divides by the arrangement
// count. The three-term rotation sum equals 3x this symmetrization.
template <class Scalar, class Tensor, class EntryVisitor>
void defect_accumulate(const Tensor& upsilon, EntryVisitor&& conn_visit,
                       std::map<std::array<int, 4>, Scalar>& acc) {
  // conn_visit(fn) invokes fn(a, b, l, value) per nonzero conn component (0-based)
  conn_visit([&](int a, int b, int l, const Scalar& cval) {
    for (const auto& ent : upsilon) {
      const int t0 = ent.idx[0], t1 = ent.idx[1], t2 = ent.idx[2];
      auto emit = [&](int j, int k, int i_new, const Scalar& val) {
        // E_{l, i_new, j, k} += val, and the (k,j) ordered twin when j != k
        std::array<int, 4> quad = {l, i_new, j, k};
        std::sort(quad.begin(), quad.end());
        Scalar contrib = val;
        if (j != k) contrib += val;
        acc[quad] += contrib;
      };
      auto try_removals = [&](int target, int i_new, bool positive) {
        Scalar val = positive ? cval * ent.v : -(cval * ent.v);
        if (t0 == target) emit(t1, t2, i_new, val);
        if (t1 == target && t1 != t0) emit(t0, t2, i_new, val);
        if (t2 == target && t2 != t1) emit(t0, t1, i_new, val);
      };
      // sum_m C_mi|l Y_mjk with C = cval * (E_ab slice l):
      //   i = b: +cval * Y_{a j k};  i = a: -cval * Y_{b j k}
      try_removals(a, b, true);
      try_removals(b, a, false);
    }
  });
}

struct FloatEntry {
  std::array<int, 3> idx;
  double v;
};

std::vector<FloatEntry> float_entries(const UpsilonFloat& u) {
  std::vector<FloatEntry> out;
  out.reserve(u.entries.size());
  for (const auto& e : u.entries) out.push_back({{e.i, e.j, e.k}, e.v});
  return out;
}

struct ExactEntry {
  std::array<int, 3> idx;
  ScalarQ3 v;
};

std::vector<ExactEntry> exact_entries(const UpsilonTensor& u) {
  std::vector<ExactEntry> out;
  out.reserve(u.entries.size());
  for (const auto& [t, v] : u.entries) out.push_back({{t[0] - 1, t[1] - 1, t[2] - 1}, v});
  return out;
}

}  // namespace

Sym4Tensor nearly_integrable_defect(const ConnElement& c, const UpsilonFloat& u) {
  if (c.n != u.n) throw std::invalid_argument("defect: dimension mismatch");
  const int n = u.n;
  std::map<std::array<int, 4>, double> acc;
  auto entries = float_entries(u);
  defect_accumulate<double>(
      entries,
      [&](auto&& fn) {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            for (int l = 0; l < n; ++l) {
              double v = c.comps[conn_index(a, b, l, n)];
              if (v != 0.0) fn(a, b, l, v);
            }
          }
        }
      },
      acc);
  Sym4Tensor out;
  out.n = n;
  for (auto& [quad, v] : acc) {
    double s = 3.0 * v / distinct_arrangements4(quad);
    if (s != 0.0) out.entries.emplace(quad, s);
  }
  return out;
}

int psd_rank(Eigen::MatrixXd& g, double sv_tol) {
  const int m = static_cast<int>(g.rows());
  double max_diag = 0.0;
  for (int i = 0; i < m; ++i) max_diag = std::max(max_diag, g(i, i));
  if (max_diag <= 0.0) return 0;
  // Pivot cutoff: the squared singular-value tolerance, floored at the
  // round-off level of an m-dimensional accumulation so that squaring the
  // spectrum cannot push the cutoff below machine noise.
  const double eps = std::numeric_limits<double>::epsilon();
  const double thr = std::max(sv_tol * sv_tol, 4.0 * m * eps) * max_diag;

  // Right-looking Cholesky with diagonal pivoting, lower triangle only.
  auto sym_swap = [&](int a, int b) {
    if (a == b) return;
    std::swap(g(a, a), g(b, b));
    for (int j = 0; j < a; ++j) std::swap(g(a, j), g(b, j));
    for (int i = a + 1; i < b; ++i) std::swap(g(i, a), g(b, i));
    for (int i = b + 1; i < m; ++i) std::swap(g(i, a), g(i, b));
  };

  int rank = 0;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    for (int i = k + 1; i < m; ++i) {
      if (g(i, i) > g(piv, piv)) piv = i;
    }
    if (g(piv, piv) <= thr) break;
    sym_swap(k, piv);
    const double d = std::sqrt(g(k, k));
    const int tail = m - k - 1;
    if (tail > 0) {
      g.col(k).tail(tail) /= d;
      g.bottomRightCorner(tail, tail)
          .selfadjointView<Eigen::Lower>()
          .rankUpdate(g.col(k).tail(tail), -1.0);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Assemble the defect matrix column by column; Row = sorted quad index.
template <class Scalar, class Entries>
void for_each_defect_column(int n, const Entries& entries,
                            const std::function<void(int, const std::map<std::array<int, 4>, Scalar>&)>& sink) {
  int col = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int l = 0; l < n; ++l) {
        std::map<std::array<int, 4>, Scalar> acc;
        defect_accumulate<Scalar>(
            entries,
            [&](auto&& fn) { fn(a, b, l, Scalar(1)); },
            acc);
        sink(col, acc);
        ++col;
      }
    }
  }
}

}  // namespace

int nearly_integrable_kernel_dim(const UpsilonTensor& u, double rank_tol) {
  const int n = u.n;
  const int ncols = conn_space_dim(n);
  if (n <= 8) {
    // exact nullspace over Q(sqrt3)
    auto entries = exact_entries(u);
    std::map<std::array<int, 4>, int> quad_index;
    {
      int r = 0;
      for (const auto& q : symmetric_quadruples(n)) quad_index[q] = r++;
    }
    QMat mat(quad_index.size(), QVec(ncols, ScalarQ3()));
    for_each_defect_column<ScalarQ3>(
        n, entries, [&](int col, const std::map<std::array<int, 4>, ScalarQ3>& acc) {
          for (const auto& [quad, v] : acc) {
            if (!v.is_zero()) mat[quad_index.at(quad)][col] = v;
          }
        });
    return ncols - exact_rank_inplace(mat);
  }

  // float path: Gram matrix of the defect map, pivoted-Cholesky rank
  const UpsilonFloat uf = UpsilonFloat::from(u);
  auto entries = float_entries(uf);
  std::map<std::array<int, 4>, std::vector<std::pair<int, double>>> rows;
  for_each_defect_column<double>(
      n, entries, [&](int col, const std::map<std::array<int, 4>, double>& acc) {
        for (const auto& [quad, v] : acc) {
          if (v != 0.0) rows[quad].emplace_back(col, v);
        }
      });
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(ncols, ncols);
  for (const auto& [quad, row] : rows) {
    const double w = distinct_arrangements4(quad);
    for (std::size_t x = 0; x < row.size(); ++x) {
      for (std::size_t y = 0; y <= x; ++y) {
        gram(row[x].first, row[y].first) += w * row[x].second * row[y].second;
      }
    }
  }
  gram = gram.selfadjointView<Eigen::Lower>();
  return ncols - psd_rank(gram, rank_tol);
}

}  // namespace isocubic
