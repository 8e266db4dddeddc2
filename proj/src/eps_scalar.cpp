#include "bayesext/eps_scalar.hpp"

#include <algorithm>

#include "bayesext/error.hpp"
#include "bayesext/scalar_text.hpp"

namespace bayesext {

namespace {

const Polynomial& one_poly() {
  static const Polynomial one(Rational(1));
  return one;
}

bool is_one(const Polynomial& p) { return p == one_poly(); }

}  // namespace

EpsScalar::EpsScalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void EpsScalar::normalize() {
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  if (!is_one(den_)) {
    // Cancel common powers of e first; it is the common case and keeps the gcd small.
    const std::size_t k = std::min(num_.lowest_degree(), den_.lowest_degree());
    num_ = num_.shifted_down(k);
    den_ = den_.shifted_down(k);
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (!is_one(g)) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
  }
  const Rational c = den_.lowest_coeff();
  if (c != Rational(1)) {
    const Rational inv = Rational(1) / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

long EpsScalar::valuation() const {
  if (is_zero()) throw DomainError("valuation of zero is undefined");
  return static_cast<long>(num_.lowest_degree()) - static_cast<long>(den_.lowest_degree());
}

Rational EpsScalar::standard_part() const {
  if (is_zero()) return Rational(0);
  const long v = valuation();
  if (v < 0) throw DomainError("standard part of an infinite value " + to_string());
  if (v > 0) return Rational(0);
  return num_.lowest_coeff() / den_.lowest_coeff();
}

EpsScalar EpsScalar::operator-() const { return EpsScalar(Raw{}, -num_, den_); }

EpsScalar EpsScalar::from_coprime(Polynomial num, Polynomial den) {
  if (num.is_zero()) return EpsScalar();
  const Rational c = den.lowest_coeff();
  if (c != Rational(1)) {
    const Rational inv = Rational(1) / c;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return EpsScalar(Raw{}, std::move(num), std::move(den));
}

// Addition and multiplication take gcds of the smaller cofactors only; both operands are already
// in lowest terms, so the results are too.
EpsScalar operator+(const EpsScalar& a, const EpsScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (is_one(a.den_) && is_one(b.den_)) return EpsScalar::from_coprime(a.num_ + b.num_, a.den_);
  const Polynomial g = Polynomial::gcd(a.den_, b.den_);
  if (is_one(g)) return EpsScalar::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const Polynomial ad = Polynomial::divmod(a.den_, g).first;
  const Polynomial bd = Polynomial::divmod(b.den_, g).first;
  Polynomial t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return EpsScalar();
  const Polynomial g2 = Polynomial::gcd(t, g);
  if (is_one(g2)) return EpsScalar::from_coprime(std::move(t), ad * b.den_);
  return EpsScalar::from_coprime(Polynomial::divmod(t, g2).first, ad * Polynomial::divmod(b.den_, g2).first);
}

EpsScalar operator-(const EpsScalar& a, const EpsScalar& b) { return a + (-b); }

EpsScalar operator*(const EpsScalar& a, const EpsScalar& b) {
  if (a.is_zero() || b.is_zero()) return EpsScalar();
  if (is_one(a.den_) && is_one(b.den_)) return EpsScalar(EpsScalar::Raw{}, a.num_ * b.num_, a.den_);
  auto reduce = [](const Polynomial& n, const Polynomial& d) {
    if (is_one(d)) return std::pair{n, d};
    const Polynomial g = Polynomial::gcd(n, d);
    if (is_one(g)) return std::pair{n, d};
    return std::pair{Polynomial::divmod(n, g).first, Polynomial::divmod(d, g).first};
  };
  // Cross-cancel a's numerator against b's denominator and the other way round.
  const auto [an, bd] = reduce(a.num_, b.den_);
  const auto [bn, ad] = reduce(b.num_, a.den_);
  return EpsScalar::from_coprime(an * bn, ad * bd);
}

EpsScalar operator/(const EpsScalar& a, const EpsScalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * EpsScalar::from_coprime(b.den_, b.num_);
}

EpsScalar EpsScalar::sum(const std::vector<const EpsScalar*>& terms) {
  std::vector<std::pair<Polynomial, Polynomial>> groups;  // (den, summed num)
  for (const EpsScalar* t : terms) {
    if (t->is_zero()) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t->den_; });
    if (it == groups.end()) {
      groups.emplace_back(t->den_, t->num_);
    } else {
      it->second = it->second + t->num_;
    }
  }
  std::vector<EpsScalar> parts;
  parts.reserve(groups.size());
  for (auto& [den, num] : groups) {
    if (!num.is_zero()) parts.emplace_back(std::move(num), std::move(den));
  }
  if (parts.empty()) return EpsScalar();
  while (parts.size() > 1) {
    std::vector<EpsScalar> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return parts.front();
}

std::strong_ordering operator<=>(const EpsScalar& a, const EpsScalar& b) {
  // Denominators are positive (lowest coefficient 1), so the sign of a - b is the sign of the
  // cross-multiplied numerator.
  const Polynomial diff = a.num_ * b.den_ - b.num_ * a.den_;
  const int s = diff.is_zero() ? 0 : diff.lowest_coeff().sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string EpsScalar::to_string() const {
  if (is_one(den_)) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

EpsScalar EpsScalar::parse(std::string_view text) { return parse_eps_scalar(text); }

}  // namespace bayesext
