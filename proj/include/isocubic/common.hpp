#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace isocubic {

/// Exact computations run over Q(sqrt3); float computations use doubles with
/// documented rank/cluster tolerances.
enum class Mode { Exact, Float };

constexpr double kDefaultRankTol = 1e-8;
constexpr double kDefaultClusterTol = 1e-6;
constexpr double kDefaultCurvatureTol = 1e-6;

/// dim so(n) = n(n-1)/2.
constexpr int so_dim(int n) { return n * (n - 1) / 2; }
/// dim Lambda^3 R^n = C(n,3).
constexpr int lambda3_dim(int n) { return n * (n - 1) * (n - 2) / 6; }
/// dim so(n) (x) R^n.
constexpr int conn_space_dim(int n) { return so_dim(n) * n; }

/// Lexicographic index of the pair (a,b), 0 <= a < b < n.
constexpr int pair_index(int a, int b, int n) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// Inverse of pair_index.
std::array<int, 2> pair_from_index(int idx, int n);

/// Lexicographic index of the triple (i,j,k), 0 <= i < j < k < n.
int triple_index(int i, int j, int k, int n);

/// All strictly increasing triples of {0..n-1} in lexicographic order.
const std::vector<std::array<int, 3>>& sorted_triples(int n);

/// All nondecreasing quadruples of {0..n-1} in lexicographic order
/// (index set of a totally symmetric rank-4 tensor).
std::vector<std::array<int, 4>> symmetric_quadruples(int n);

/// All nondecreasing triples of {0..n-1} in lexicographic order (index set
/// of a totally symmetric rank-3 tensor, dimension C(n+2,3)).
std::vector<std::array<int, 3>> symmetric_triples(int n);

/// Component index of the connection element slot (pair (a,b), frame l):
/// pair-major layout, idx = pair_index(a,b,n) * n + l (all 0-based).
constexpr int conn_index(int a, int b, int l, int n) {
  return pair_index(a, b, n) * n + l;
}

/// Number of distinct ordered arrangements of a sorted quadruple.
int distinct_arrangements4(const std::array<int, 4>& q);

/// Multinomial count of a sorted triple: how many ordered triples collapse
/// onto it (6, 3 or 1).
int multinomial_count3(const std::array<int, 3>& t);

}  // namespace isocubic
