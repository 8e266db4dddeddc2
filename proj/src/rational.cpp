#include "bayesext/rational.hpp"

#include <cctype>
#include <map>

#include "bayesext/error.hpp"

namespace bayesext {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  if (!is_integer_literal(num)) throw ParseError("malformed rational '" + std::string(s) + "'", 0);
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(num)));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(den)) {
    throw ParseError("malformed rational '" + std::string(s) + "'", slash + 1);
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(parse_integer(num), d));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::sum(const std::vector<const Rational*>& terms) {
  std::map<mpz_class, mpz_class> groups;  // denominator -> summed numerator
  for (const Rational* t : terms) groups[t->value_.get_den()] += t->value_.get_num();
  std::vector<mpq_class> parts;
  parts.reserve(groups.size());
  for (const auto& [den, num] : groups) {
    mpq_class q(num, den);
    q.canonicalize();
    parts.push_back(std::move(q));
  }
  if (parts.empty()) return Rational();
  while (parts.size() > 1) {
    std::vector<mpq_class> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return Rational(std::move(parts.front()));
}

}  // namespace bayesext
