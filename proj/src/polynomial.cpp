#include "isocubic/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace isocubic {

ExactPoly ExactPoly::constant(const ScalarQ3& c) {
  ExactPoly p;
  p.add_term({}, c);
  return p;
}

ExactPoly ExactPoly::variable(int i) {
  ExactPoly p;
  p.add_term({i}, ScalarQ3(1));
  return p;
}

ScalarQ3 ExactPoly::coeff(Monomial m) const {
  std::sort(m.begin(), m.end());
  auto it = terms_.find(m);
  return it == terms_.end() ? ScalarQ3() : it->second;
}

void ExactPoly::add_term(Monomial m, const ScalarQ3& c) {
  if (c.is_zero()) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExactPoly operator+(const ExactPoly& x, const ExactPoly& y) {
  ExactPoly out = x;
  out += y;
  return out;
}

ExactPoly operator-(const ExactPoly& x, const ExactPoly& y) {
  ExactPoly out = x;
  out -= y;
  return out;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& y) {
  for (const auto& [m, c] : y.terms_) add_term(m, c);
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& y) {
  for (const auto& [m, c] : y.terms_) add_term(m, -c);
  return *this;
}

ExactPoly operator*(const ExactPoly& x, const ExactPoly& y) {
  ExactPoly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      ExactPoly::Monomial m;
      m.reserve(mx.size() + my.size());
      std::merge(mx.begin(), mx.end(), my.begin(), my.end(), std::back_inserter(m));
      out.add_term(std::move(m), cx * cy);
    }
  }
  return out;
}

ExactPoly operator*(const ScalarQ3& s, const ExactPoly& x) {
  ExactPoly out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, s * c);
  return out;
}

ScalarQ3 ExactPoly::eval(std::span<const ScalarQ3> point) const {
  ScalarQ3 acc;
  for (const auto& [m, c] : terms_) {
    ScalarQ3 v = c;
    for (int i : m) v *= point[static_cast<std::size_t>(i - 1)];
    acc += v;
  }
  return acc;
}

ExactPoly ExactPoly::derivative(int i) const {
  ExactPoly out;
  for (const auto& [m, c] : terms_) {
    long deg = std::count(m.begin(), m.end(), i);
    if (deg == 0) continue;
    Monomial reduced;
    reduced.reserve(m.size() - 1);
    bool removed = false;
    for (int v : m) {
      if (!removed && v == i) {
        removed = true;
        continue;
      }
      reduced.push_back(v);
    }
    out.add_term(std::move(reduced), ScalarQ3(deg) * c);
  }
  return out;
}

std::string ExactPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    for (int i : m) os << "*a" << i;
    first = false;
  }
  return os.str();
}

}  // namespace isocubic
