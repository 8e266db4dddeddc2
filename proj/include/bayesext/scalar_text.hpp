#pragma once

#include <string>
#include <string_view>

#include "bayesext/eps_scalar.hpp"
#include "bayesext/rational.hpp"

namespace bayesext {

/// Parses the scalar grammar:
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor)*
///   factor  := ('+' | '-') factor | power
///   power   := primary ('^' integer)?
///   primary := integer | 'e' | '(' expr ')'
/// Throws ParseError on malformed input and DivisionByZero on a zero divisor.
EpsScalar parse_eps_scalar(std::string_view text);

/// Same grammar without 'e'; the result must be a rational number.
Rational parse_rational_scalar(std::string_view text);

template <typename F>
F parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational_scalar(text);
}

template <>
inline EpsScalar parse_scalar<EpsScalar>(std::string_view text) {
  return parse_eps_scalar(text);
}

inline std::string to_text(const Rational& r) { return r.to_string(); }
inline std::string to_text(const EpsScalar& s) { return s.to_string(); }

}  // namespace bayesext
