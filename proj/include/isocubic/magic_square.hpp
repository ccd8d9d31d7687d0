#pragma once

#include <string>
#include <vector>

namespace isocubic {

/// One torsionless model G/H: the homogeneous-space dimension is the
/// difference of the standard Lie algebra dimensions.
struct ModelEntry {
  std::string model;            // e.g. "Sp(3)/U(3)"
  int total_algebra_dim = 0;    // dim of the numerator Lie algebra
  int isotropy_dim = 0;
  int space_dim = 0;            // total - isotropy
  std::string structure_group;
};

/// The twelve magic-square torsionless models (columns n_k, 2(n_k+1),
/// 4(n_k+2)) followed by the two exceptional cases (dims 8 and 32).
std::vector<ModelEntry> model_table();

}  // namespace isocubic
