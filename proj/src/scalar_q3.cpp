#include "isocubic/scalar_q3.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace isocubic {

ScalarQ3 ScalarQ3::inverse() const {
  if (is_zero()) {
    throw std::domain_error("ScalarQ3: division by zero");
  }
  mpq_class d = p_ * p_ - 3 * q_ * q_;
  // d == 0 with (p,q) != 0 would mean (p/q)^2 = 3 for rationals.
  return ScalarQ3(p_ / d, -q_ / d);
}

double ScalarQ3::to_double() const {
  return p_.get_d() + q_.get_d() * std::numbers::sqrt3;
}

std::string ScalarQ3::str() const {
  if (q_ == 0) return rational_to_string(p_);
  std::string s;
  if (p_ != 0) s = rational_to_string(p_) + " + ";
  s += rational_to_string(q_) + "*sqrt3";
  return s;
}

std::ostream& operator<<(std::ostream& os, const ScalarQ3& x) { return os << x.str(); }

std::string rational_to_string(const mpq_class& r) { return r.get_str(); }

mpq_class rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational string");
  mpq_class r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational string: " + s);
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace isocubic
