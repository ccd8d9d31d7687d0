#include "isocubic/division_algebra.hpp"

#include <mutex>
#include <sstream>

namespace isocubic {

namespace {

// Integer coordinate vectors of length 2^k; products of basis units stay
// signed units, so int arithmetic is enough to generate the table.
using IVec = std::vector<int>;

IVec iconj(IVec x) {
  for (std::size_t u = 1; u < x.size(); ++u) x[u] = -x[u];
  return x;
}

// Cayley-Dickson doubling on halves: (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
IVec imul(const IVec& x, const IVec& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  auto lo = [&](const IVec& v) { return IVec(v.begin(), v.begin() + h); };
  auto hi = [&](const IVec& v) { return IVec(v.begin() + h, v.end()); };
  auto add = [](IVec u, const IVec& v) {
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += v[k];
    return u;
  };
  auto sub = [](IVec u, const IVec& v) {
    for (std::size_t k = 0; k < u.size(); ++k) u[k] -= v[k];
    return u;
  };
  IVec a = lo(x), b = hi(x), c = lo(y), d = hi(y);
  IVec first = sub(imul(a, c), imul(iconj(d), b));
  IVec second = add(imul(d, a), imul(b, iconj(c)));
  IVec out(n);
  for (std::size_t k = 0; k < h; ++k) {
    out[k] = first[k];
    out[h + k] = second[k];
  }
  return out;
}

std::array<std::array<UnitProduct, 8>, 8> build_table() {
  std::array<std::array<UnitProduct, 8>, 8> table{};
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      IVec x(8, 0), y(8, 0);
      x[u] = 1;
      y[v] = 1;
      IVec z = imul(x, y);
      int idx = -1, sign = 0;
      for (int k = 0; k < 8; ++k) {
        if (z[k] != 0) {
          idx = k;
          sign = z[k];
        }
      }
      table[u][v] = UnitProduct{sign, idx};
    }
  }
  return table;
}

}  // namespace

const UnitProduct& unit_product(int u, int v) {
  static const auto table = build_table();
  return table[u][v];
}

const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::Real: return "R";
    case Algebra::Complex: return "C";
    case Algebra::Quaternion: return "H";
    case Algebra::Octonion: return "O";
  }
  return "?";
}

Algebra algebra_for_point_dim(int n) {
  switch (n) {
    case 5: return Algebra::Real;
    case 8: return Algebra::Complex;
    case 14: return Algebra::Quaternion;
    case 26: return Algebra::Octonion;
    default:
      throw std::invalid_argument("unsupported dimension " + std::to_string(n) +
                                  " (expected 5, 8, 14 or 26)");
  }
}

AlgElement AlgElement::unit(Algebra a, int k) {
  AlgElement e(a);
  e.c_.at(k) = ScalarQ3(1);
  return e;
}

AlgElement AlgElement::scalar(Algebra a, const ScalarQ3& v) {
  AlgElement e(a);
  e.c_[0] = v;
  return e;
}

bool AlgElement::is_zero() const {
  for (const auto& v : c_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

ScalarQ3 AlgElement::norm2() const {
  ScalarQ3 s;
  for (const auto& v : c_) s += v * v;
  return s;
}

AlgElement operator+(const AlgElement& x, const AlgElement& y) {
  if (x.alg_ != y.alg_) throw std::invalid_argument("AlgElement: algebra mismatch");
  AlgElement out(x.alg_);
  for (int k = 0; k < x.dim(); ++k) out.c_[k] = x.c_[k] + y.c_[k];
  return out;
}

AlgElement operator-(const AlgElement& x, const AlgElement& y) {
  if (x.alg_ != y.alg_) throw std::invalid_argument("AlgElement: algebra mismatch");
  AlgElement out(x.alg_);
  for (int k = 0; k < x.dim(); ++k) out.c_[k] = x.c_[k] - y.c_[k];
  return out;
}

AlgElement operator*(const ScalarQ3& s, const AlgElement& x) {
  AlgElement out(x.alg_);
  for (int k = 0; k < x.dim(); ++k) out.c_[k] = s * x.c_[k];
  return out;
}

AlgElement AlgElement::operator-() const {
  AlgElement out(alg_);
  for (int k = 0; k < dim(); ++k) out.c_[k] = -c_[k];
  return out;
}

std::string AlgElement::str() const {
  static const char* units[8] = {"1", "i", "j", "k", "p", "q", "r", "s"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < dim(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].str() << ")" << units[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace isocubic
