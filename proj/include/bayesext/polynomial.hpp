#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bayesext/rational.hpp"

namespace bayesext {

/// Polynomial in the infinitesimal e with rational coefficients.
/// coeffs()[k] is the coefficient of e^k; the highest stored coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  /// c * e^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the highest nonzero term; requires a nonzero polynomial.
  std::size_t degree() const;
  /// Degree of the lowest nonzero term; requires a nonzero polynomial.
  std::size_t lowest_degree() const;
  const Rational& lowest_coeff() const;
  const Rational& leading_coeff() const;
  Rational coeff(std::size_t k) const;
  std::size_t term_count() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  /// Divides by e^k; the k lowest coefficients must be zero.
  Polynomial shifted_down(std::size_t k) const;

  /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Ascending-degree text such as "1/2 - 1/6*e + 3*e^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace bayesext
