#include "isocubic/magic_square.hpp"

namespace isocubic {

namespace {

// standard compact Lie algebra dimensions
constexpr int so3 = 3, su3 = 8, sp3 = 21, su6 = 35, so12 = 66;
constexpr int f4 = 52, e6 = 78, e7 = 133, e8 = 248, g2 = 14;
constexpr int so10 = 45, u1 = 1, su2 = 3, u3 = 9, u6 = 36;

ModelEntry entry(std::string model, int total, int isotropy, std::string group) {
  return ModelEntry{std::move(model), total, isotropy, total - isotropy, std::move(group)};
}

}  // namespace

std::vector<ModelEntry> model_table() {
  std::vector<ModelEntry> t;
  // column n = n_k: the H_k geometries
  t.push_back(entry("SU(3)/SO(3)", su3, so3, "SO(3)"));
  t.push_back(entry("SU(3)", su3 + su3, su3, "SU(3)"));  // group manifold (SU3xSU3)/SU3
  t.push_back(entry("SU(6)/Sp(3)", su6, sp3, "Sp(3)"));
  t.push_back(entry("E6/F4", e6, f4, "F4"));
  // column n = 2(n_k+1)
  t.push_back(entry("Sp(3)/U(3)", sp3, u3, "U(3)"));
  t.push_back(entry("SU(6)/S(U(3)xU(3))", su6, su3 + su3 + u1, "S(U(3)xU(3))"));
  t.push_back(entry("SO(12)/U(6)", so12, u6, "U(6)"));
  t.push_back(entry("E7/(E6xSO(2))", e7, e6 + u1, "E6xSO(2)"));
  // column n = 4(n_k+2)
  t.push_back(entry("F4/(Sp(3)xSU(2))", f4, sp3 + su2, "Sp(3)xSU(2)"));
  t.push_back(entry("E6/(SU(6)xSU(2))", e6, su6 + su2, "SU(6)xSU(2)"));
  t.push_back(entry("E7/(SO(12)xSU(2))", e7, so12 + su2, "SO(12)xSU(2)"));
  t.push_back(entry("E8/(E7xSU(2))", e8, e7 + su2, "E7xSU(2)"));
  // the two exceptional cases
  t.push_back(entry("G2/(SU(2)xSU(2))", g2, su2 + su2, "SU(2)xSU(2)"));
  t.push_back(entry("E6/(SO(10)xSO(2))", e6, so10 + u1, "SO(10)xSO(2)"));
  return t;
}

}  // namespace isocubic
