#pragma once

#include "isocubic/scalar_q3.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace isocubic {

/// The four normed division algebras over the reals.
enum class Algebra { Real, Complex, Quaternion, Octonion };

constexpr int algebra_dim(Algebra a) {
  switch (a) {
    case Algebra::Real: return 1;
    case Algebra::Complex: return 2;
    case Algebra::Quaternion: return 4;
    case Algebra::Octonion: return 8;
  }
  return 0;
}

const char* algebra_name(Algebra a);

/// Point dimensions 5, 8, 14, 26 carry entries in R, C, H, O respectively
/// (algebra dimension (n-2)/3). Throws std::invalid_argument otherwise.
Algebra algebra_for_point_dim(int n);

constexpr std::array<int, 4> kPointDims = {5, 8, 14, 26};
inline bool is_supported_dim(int n) { return n == 5 || n == 8 || n == 14 || n == 26; }

/// Product of two basis units e_u * e_v = sign * e_idx. Units are ordered
/// (1, i, j, k, p, q, r, s); the table is generated once by Cayley-Dickson
/// doubling, (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)), so that
/// p = (0,1), q = (0,i), r = (0,j), s = (0,k).
struct UnitProduct {
  int sign;  // +1 or -1
  int idx;   // 0..7
};
const UnitProduct& unit_product(int u, int v);

namespace alg_detail {

/// Generic coordinate arithmetic over any commutative ring with the same
/// structure constants. Instantiated for ScalarQ3 (exact elements) and for
/// exact polynomials (symbolic determinant expansion).
template <class Ring>
std::vector<Ring> mul_coords(const std::vector<Ring>& x, const std::vector<Ring>& y) {
  std::vector<Ring> out(x.size(), Ring{});
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (x[u].is_zero()) continue;
    for (std::size_t v = 0; v < y.size(); ++v) {
      if (y[v].is_zero()) continue;
      const UnitProduct& t = unit_product(static_cast<int>(u), static_cast<int>(v));
      Ring term = x[u] * y[v];
      if (t.sign < 0) {
        out[t.idx] -= term;
      } else {
        out[t.idx] += term;
      }
    }
  }
  return out;
}

template <class Ring>
std::vector<Ring> conj_coords(std::vector<Ring> x) {
  for (std::size_t u = 1; u < x.size(); ++u) x[u] = -x[u];
  return x;
}

}  // namespace alg_detail

/// Element of R, C, H or O with exact ScalarQ3 coordinates in the unit
/// order (1, i, j, k, p, q, r, s) truncated to the algebra dimension.
class AlgElement {
public:
  explicit AlgElement(Algebra a) : alg_(a), c_(algebra_dim(a)) {}
  AlgElement(Algebra a, std::vector<ScalarQ3> coords) : alg_(a), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != algebra_dim(a)) {
      throw std::invalid_argument("AlgElement: coordinate count does not match algebra");
    }
  }

  static AlgElement unit(Algebra a, int k);
  static AlgElement scalar(Algebra a, const ScalarQ3& v);

  Algebra algebra() const { return alg_; }
  int dim() const { return static_cast<int>(c_.size()); }
  const ScalarQ3& coord(int k) const { return c_.at(k); }
  ScalarQ3& coord(int k) { return c_.at(k); }
  const std::vector<ScalarQ3>& coords() const { return c_; }

  bool is_zero() const;

  AlgElement conj() const { return AlgElement(alg_, alg_detail::conj_coords(c_)); }
  /// Sum of squared coordinates; equals re(x * conj(x)).
  ScalarQ3 norm2() const;
  const ScalarQ3& re() const { return c_[0]; }

  friend AlgElement operator*(const AlgElement& x, const AlgElement& y) {
    if (x.alg_ != y.alg_) throw std::invalid_argument("AlgElement: algebra mismatch");
    return AlgElement(x.alg_, alg_detail::mul_coords(x.c_, y.c_));
  }
  friend AlgElement operator+(const AlgElement& x, const AlgElement& y);
  friend AlgElement operator-(const AlgElement& x, const AlgElement& y);
  friend AlgElement operator*(const ScalarQ3& s, const AlgElement& x);
  AlgElement operator-() const;

  friend bool operator==(const AlgElement& x, const AlgElement& y) {
    return x.alg_ == y.alg_ && x.c_ == y.c_;
  }

  std::string str() const;

private:
  Algebra alg_;
  std::vector<ScalarQ3> c_;
};

}  // namespace isocubic
