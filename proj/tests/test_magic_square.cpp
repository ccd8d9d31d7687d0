#include "isocubic/magic_square.hpp"

#include <doctest.h>

using namespace isocubic;

TEST_CASE("fourteen models with the printed dimensions") {
  auto table = model_table();
  REQUIRE(table.size() == 14);
  const int expected[14] = {5, 8, 14, 26, 12, 18, 30, 54, 28, 40, 64, 112, 8, 32};
  for (int i = 0; i < 14; ++i) {
    CHECK(table[i].space_dim == expected[i]);
    CHECK(table[i].space_dim == table[i].total_algebra_dim - table[i].isotropy_dim);
  }
  // column patterns: n_k, 2(n_k + 1), 4(n_k + 2)
  const int nk[4] = {5, 8, 14, 26};
  for (int i = 0; i < 4; ++i) {
    CHECK(table[i].space_dim == nk[i]);
    CHECK(table[4 + i].space_dim == 2 * (nk[i] + 1));
    CHECK(table[8 + i].space_dim == 4 * (nk[i] + 2));
  }
  CHECK(table[1].model == "SU(3)");
  CHECK(table[11].model == "E8/(E7xSU(2))");
  CHECK(table[11].space_dim == 248 - 133 - 3);
  CHECK(table[13].model == "E6/(SO(10)xSO(2))");
  CHECK(table[13].space_dim == 78 - 45 - 1);
  CHECK(table[12].structure_group == "SU(2)xSU(2)");
}
