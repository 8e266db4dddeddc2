#pragma once

#include <concepts>
#include <string>

#include "bayesext/eps_scalar.hpp"
#include "bayesext/rational.hpp"
#include "bayesext/scalar_text.hpp"

namespace bayesext {

/// Exact ordered field usable as a probability scalar.
template <typename F>
concept OrderedField = requires(const F a, const F b, long n) {
  { F(n) } -> std::same_as<F>;
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { a.sign() } -> std::convertible_to<int>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { to_text(a) } -> std::same_as<std::string>;
};

static_assert(OrderedField<Rational>);
static_assert(OrderedField<EpsScalar>);

enum class FieldTag { rational, infinitesimal };

template <typename F>
constexpr FieldTag field_tag_of();

template <>
constexpr FieldTag field_tag_of<Rational>() { return FieldTag::rational; }

template <>
constexpr FieldTag field_tag_of<EpsScalar>() { return FieldTag::infinitesimal; }

}  // namespace bayesext
