#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace isocubic {

/// Element of the real quadratic field Q(sqrt(3)), stored as p + q*sqrt(3)
/// with exact arbitrary-precision rational coefficients. Both coefficients
/// are kept in reduced canonical form (gcd(num, den) = 1, den > 0), so
/// equality is a componentwise comparison and zero means p = q = 0.
/// Values are immutable in spirit: every operation returns a fresh value.
class ScalarQ3 {
public:
  ScalarQ3() : p_(0), q_(0) {}
  ScalarQ3(long v) : p_(v), q_(0) {}  // NOLINT: implicit integer lift is intended
  ScalarQ3(mpq_class p, mpq_class q) : p_(std::move(p)), q_(std::move(q)) {
    p_.canonicalize();
    q_.canonicalize();
  }

  /// 0 + 1*sqrt(3)
  static ScalarQ3 sqrt3() { return ScalarQ3(mpq_class(0), mpq_class(1)); }
  /// num/den + 0*sqrt(3)
  static ScalarQ3 rational(long num, long den) {
    return ScalarQ3(mpq_class(num, den), mpq_class(0));
  }
  /// pn/pd + (qn/qd)*sqrt(3)
  static ScalarQ3 of(long pn, long pd, long qn, long qd) {
    return ScalarQ3(mpq_class(pn, pd), mpq_class(qn, qd));
  }

  const mpq_class& p() const { return p_; }
  const mpq_class& q() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }

  ScalarQ3 operator-() const { return ScalarQ3(-p_, -q_); }

  friend ScalarQ3 operator+(const ScalarQ3& x, const ScalarQ3& y) {
    return ScalarQ3(x.p_ + y.p_, x.q_ + y.q_);
  }
  friend ScalarQ3 operator-(const ScalarQ3& x, const ScalarQ3& y) {
    return ScalarQ3(x.p_ - y.p_, x.q_ - y.q_);
  }
  /// (p1 + q1*s)(p2 + q2*s) = (p1 p2 + 3 q1 q2) + (p1 q2 + q1 p2) s,  s^2 = 3
  friend ScalarQ3 operator*(const ScalarQ3& x, const ScalarQ3& y) {
    return ScalarQ3(x.p_ * y.p_ + 3 * x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_);
  }
  friend ScalarQ3 operator/(const ScalarQ3& x, const ScalarQ3& y) {
    return x * y.inverse();
  }

  ScalarQ3& operator+=(const ScalarQ3& y) {
    p_ += y.p_;
    q_ += y.q_;
    return *this;
  }
  ScalarQ3& operator-=(const ScalarQ3& y) {
    p_ -= y.p_;
    q_ -= y.q_;
    return *this;
  }
  ScalarQ3& operator*=(const ScalarQ3& y) {
    *this = *this * y;
    return *this;
  }

  /// Multiplicative inverse, (p - q*sqrt3)/(p^2 - 3 q^2).
  /// The denominator vanishes only at zero because sqrt(3) is irrational.
  /// Throws std::domain_error on zero input.
  ScalarQ3 inverse() const;

  friend bool operator==(const ScalarQ3& x, const ScalarQ3& y) {
    return x.p_ == y.p_ && x.q_ == y.q_;
  }
  friend bool operator!=(const ScalarQ3& x, const ScalarQ3& y) { return !(x == y); }

  /// p + q*sqrt(3) in double precision; each coefficient and the machine
  /// sqrt(3) are rounded once.
  double to_double() const;

  /// Debug rendering, e.g. "1/2 + 3*sqrt3".
  std::string str() const;

private:
  mpq_class p_, q_;
};

std::ostream& operator<<(std::ostream& os, const ScalarQ3& x);

/// Serialize one rational coefficient as a decimal string ("-3/4", "0", "7").
std::string rational_to_string(const mpq_class& r);
/// Parse "num/den" or plain "num" decimal strings. Throws std::invalid_argument.
mpq_class rational_from_string(const std::string& s);

}  // namespace isocubic
