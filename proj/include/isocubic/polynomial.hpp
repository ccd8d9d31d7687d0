#pragma once

#include "isocubic/scalar_q3.hpp"

#include <map>
#include <span>
#include <vector>

namespace isocubic {

/// Sparse multivariate polynomial over ScalarQ3. A monomial is the sorted
/// list of its variable indices with repetition (1-based), so a_1^2 a_4 is
/// {1, 1, 4} and the constant monomial is {}.
class ExactPoly {
public:
  using Monomial = std::vector<int>;
  using TermMap = std::map<Monomial, ScalarQ3>;

  ExactPoly() = default;

  static ExactPoly constant(const ScalarQ3& c);
  static ExactPoly variable(int i);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given monomial (indices need not be sorted).
  ScalarQ3 coeff(Monomial m) const;

  void add_term(Monomial m, const ScalarQ3& c);

  ExactPoly operator-() const;
  friend ExactPoly operator+(const ExactPoly& x, const ExactPoly& y);
  friend ExactPoly operator-(const ExactPoly& x, const ExactPoly& y);
  friend ExactPoly operator*(const ExactPoly& x, const ExactPoly& y);
  friend ExactPoly operator*(const ScalarQ3& s, const ExactPoly& x);
  ExactPoly& operator+=(const ExactPoly& y);
  ExactPoly& operator-=(const ExactPoly& y);

  friend bool operator==(const ExactPoly& x, const ExactPoly& y) {
    return x.terms_ == y.terms_;
  }

  /// Evaluate at an exact point; point[k] is the value of variable k+1.
  ScalarQ3 eval(std::span<const ScalarQ3> point) const;

  /// Partial derivative with respect to variable i (1-based).
  ExactPoly derivative(int i) const;

  std::string str() const;

private:
  TermMap terms_;  // zero coefficients are never stored
};

}  // namespace isocubic
