#include "isocubic/exact_linalg.hpp"

#include <stdexcept>

namespace isocubic {

namespace {

// Reduced row echelon form; returns the pivot column of each pivot row.
std::vector<int> rref(QMat& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const ScalarQ3 inv = m[r][c].inverse();
    for (int j = c; j < cols; ++j) m[r][j] = inv * m[r][j];
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const ScalarQ3 f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int exact_rank_inplace(QMat& m) { return static_cast<int>(rref(m).size()); }

int exact_rank(QMat m) { return exact_rank_inplace(m); }

std::vector<int> exact_pivot_columns(QMat m) { return rref(m); }

std::vector<QVec> exact_nullspace(QMat m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  const std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (int free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    QVec v(cols, ScalarQ3());
    v[free_c] = ScalarQ3(1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
      v[pivots[pr]] = -m[pr][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> exact_solve(QMat m, QVec b) {
  if (m.empty()) return QVec{};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  if (static_cast<int>(b.size()) != rows) {
    throw std::invalid_argument("exact_solve: size mismatch");
  }
  for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
  const std::vector<int> pivots = rref(m);
  // inconsistent iff a pivot lands in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVec x(cols, ScalarQ3());
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
    x[pivots[pr]] = m[pr][cols];
  }
  return x;
}

bool exact_in_span(const QMat& m, const QVec& b) {
  // columns of m span; transpose into solver form
  if (m.empty()) {
    for (const auto& v : b) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  return exact_solve(m, b).has_value();
}

}  // namespace isocubic
