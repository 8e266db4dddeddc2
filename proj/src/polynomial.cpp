#include "bayesext/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "bayesext/error.hpp"

namespace bayesext {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

std::size_t Polynomial::lowest_degree() const {
  if (is_zero()) throw DomainError("lowest degree of the zero polynomial");
  std::size_t k = 0;
  while (coeffs_[k].is_zero()) ++k;
  return k;
}

const Rational& Polynomial::lowest_coeff() const { return coeffs_[lowest_degree()]; }

const Rational& Polynomial::leading_coeff() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

std::size_t Polynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); }));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Polynomial Polynomial::shifted_down(std::size_t k) const {
  if (k == 0 || is_zero()) return *this;
  assert(lowest_degree() >= k);
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero() || a.degree() < b.degree()) return {Polynomial(), a};
  const std::size_t db = b.degree();
  const Rational& lead = b.leading_coeff();
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  // Monic remainders keep the rational coefficients from growing along the sequence.
  auto monic = [](const Polynomial& p) { return p.scaled(Rational(1) / p.leading_coeff()); };
  if (a.is_zero()) return b.is_zero() ? b : monic(b);
  if (b.is_zero()) return monic(a);
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : monic(r);
  }
  return a;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -c : c;
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "e";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace bayesext
