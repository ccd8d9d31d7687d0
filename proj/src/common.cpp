#include "isocubic/common.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace isocubic {

std::array<int, 2> pair_from_index(int idx, int n) {
  for (int a = 0; a < n - 1; ++a) {
    int row = n - 1 - a;
    if (idx < row) return {a, a + 1 + idx};
    idx -= row;
  }
  throw std::out_of_range("pair index out of range");
}

int triple_index(int i, int j, int k, int n) {
  // number of triples starting below i, plus pairs (j,k) within the block
  auto c3 = [](int m) { return m * (m - 1) * (m - 2) / 6; };
  auto c2 = [](int m) { return m * (m - 1) / 2; };
  return c3(n) - c3(n - i) + c2(n - 1 - i) - c2(n - j) + (k - j - 1);
}

const std::vector<std::array<int, 3>>& sorted_triples(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::array<int, 3>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::array<int, 3>> out;
  out.reserve(static_cast<std::size_t>(lambda3_dim(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<std::array<int, 4>> symmetric_quadruples(int n) {
  std::vector<std::array<int, 4>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k)
        for (int l = k; l < n; ++l) out.push_back({i, j, k, l});
  return out;
}

std::vector<std::array<int, 3>> symmetric_triples(int n) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) out.push_back({i, j, k});
  return out;
}

int distinct_arrangements4(const std::array<int, 4>& q) {
  // 24 / product of factorials of repetition counts
  int counts[4] = {1, 0, 0, 0};
  int groups = 0;
  for (int t = 1; t < 4; ++t) {
    if (q[t] == q[t - 1]) {
      ++counts[groups];
    } else {
      ++groups;
      counts[groups] = 1;
    }
  }
  static const int fact[5] = {1, 1, 2, 6, 24};
  int denom = 1;
  for (int g = 0; g <= groups; ++g) denom *= fact[counts[g]];
  return 24 / denom;
}

int multinomial_count3(const std::array<int, 3>& t) {
  if (t[0] == t[1] && t[1] == t[2]) return 1;
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return 3;
  return 6;
}

}  // namespace isocubic
