#include "bayesext/scalar_text.hpp"

#include <cctype>

#include "bayesext/error.hpp"

namespace bayesext {

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, bool allow_eps) : text_(text), allow_eps_(allow_eps) {}

  EpsScalar run() {
    EpsScalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar: " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  EpsScalar expr() {
    EpsScalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  EpsScalar term() {
    EpsScalar value = factor();
    for (;;) {
      if (accept('*')) {
        value *= factor();
      } else if (accept('/')) {
        value /= factor();
      } else {
        return value;
      }
    }
  }

  EpsScalar factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  EpsScalar power() {
    EpsScalar base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const long n = std::stol(std::string(text_.substr(start, pos_ - start)));
    EpsScalar result(1);
    for (long k = 0; k < n; ++k) result *= base;
    return result;
  }

  EpsScalar primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      EpsScalar value = expr();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (c == 'e') {
      if (!allow_eps_) fail("infinitesimal 'e' not allowed in a rational scalar");
      ++pos_;
      return EpsScalar::eps();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return EpsScalar(Rational(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)), 10))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  bool allow_eps_;
  std::size_t pos_ = 0;
};

}  // namespace

EpsScalar parse_eps_scalar(std::string_view text) { return ScalarParser(text, true).run(); }

Rational parse_rational_scalar(std::string_view text) {
  const EpsScalar v = ScalarParser(text, false).run();
  return v.standard_part();
}

}  // namespace bayesext
