#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bayesext/polynomial.hpp"
#include "bayesext/rational.hpp"

namespace bayesext {

/// Rational function num(e)/den(e) in one positive infinitesimal e.
/// Canonical form: num and den coprime, and the lowest nonzero coefficient of den is 1.
/// Ordered by the sign of the lowest nonzero term (valuation order).
class EpsScalar {
 public:
  EpsScalar() : den_(Rational(1)) {}
  EpsScalar(long value) : num_(Rational(value)), den_(Rational(1)) {}  // NOLINT
  EpsScalar(const Rational& value) : num_(value), den_(Rational(1)) {}  // NOLINT
  EpsScalar(Polynomial num, Polynomial den);

  static EpsScalar eps() { return EpsScalar(Polynomial::monomial(Rational(1), 1), Rational(1)); }
  static EpsScalar parse(std::string_view text);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return is_zero() ? 0 : num_.lowest_coeff().sign(); }
  /// Lowest degree of num minus lowest degree of den; throws DomainError on zero.
  long valuation() const;
  /// Coefficient of e^0 of the series expansion; throws DomainError on infinite values.
  Rational standard_part() const;
  bool is_standard() const { return den_ == Polynomial(Rational(1)) && num_.coeffs().size() <= 1; }

  std::string to_string() const;

  EpsScalar operator-() const;
  friend EpsScalar operator+(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator-(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator*(const EpsScalar& a, const EpsScalar& b);
  friend EpsScalar operator/(const EpsScalar& a, const EpsScalar& b);
  EpsScalar& operator+=(const EpsScalar& b) { return *this = *this + b; }
  EpsScalar& operator-=(const EpsScalar& b) { return *this = *this - b; }
  EpsScalar& operator*=(const EpsScalar& b) { return *this = *this * b; }
  EpsScalar& operator/=(const EpsScalar& b) { return *this = *this / b; }

  /// Sum of many terms: numerators over equal denominators are added first, then the groups
  /// are combined pairwise.
  static EpsScalar sum(const std::vector<const EpsScalar*>& terms);

  friend bool operator==(const EpsScalar&, const EpsScalar&) = default;
  friend std::strong_ordering operator<=>(const EpsScalar& a, const EpsScalar& b);

 private:
  struct Raw {};
  EpsScalar(Raw, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  /// num and den already coprime; only rescales den to the canonical lowest coefficient.
  static EpsScalar from_coprime(Polynomial num, Polynomial den);
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace bayesext
