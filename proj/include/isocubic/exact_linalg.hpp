#pragma once

#include "isocubic/scalar_q3.hpp"

#include <optional>
#include <vector>

namespace isocubic {

using QVec = std::vector<ScalarQ3>;
/// Dense row-major matrix over Q(sqrt3).
using QMat = std::vector<QVec>;

/// Rank by Gauss-Jordan elimination over the field (destroys m).
int exact_rank_inplace(QMat& m);
int exact_rank(QMat m);

/// Indices of a maximal independent column set (the RREF pivot columns).
std::vector<int> exact_pivot_columns(QMat m);

/// Basis of the right nullspace {x : m x = 0}.
std::vector<QVec> exact_nullspace(QMat m);

/// One solution of m x = b when consistent, nullopt otherwise.
std::optional<QVec> exact_solve(QMat m, QVec b);

/// True iff b lies in the column span of m.
bool exact_in_span(const QMat& m, const QVec& b);

}  // namespace isocubic
