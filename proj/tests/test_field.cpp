#include <random>

#include "bayesext/eps_scalar.hpp"
#include "bayesext/error.hpp"
#include "bayesext/field.hpp"
#include "bayesext/rational.hpp"
#include "bayesext/scalar_text.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bayesext;
using oracle::Q;

namespace {
EpsScalar E(const char* text) { return parse_eps_scalar(text); }
}  // namespace

TEST_SUITE("field") {
  TEST_CASE("rational arithmetic examples") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK(Rational::parse("6/4").to_string() == "3/2");
    CHECK(Rational::parse("-7").to_string() == "-7");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  }

  TEST_CASE("infinitesimal arithmetic examples") {
    const EpsScalar e = EpsScalar::eps();
    CHECK((1 - e) * (1 + e) == 1 - e * e);
    const EpsScalar inv = EpsScalar(1) / (1 + e);
    CHECK(inv * (1 + e) == EpsScalar(1));
    CHECK_FALSE(inv.is_standard());
    CHECK_THROWS_AS(e / EpsScalar(0), DivisionByZero);
  }

  TEST_CASE("comparison examples") {
    const EpsScalar e = EpsScalar::eps();
    CHECK(e > EpsScalar(0));
    CHECK(e < EpsScalar(Rational(1, 1000000)));
    CHECK(e <=> e == std::strong_ordering::equal);
    CHECK(-e < EpsScalar(0));
    CHECK(1 - e < EpsScalar(1));
    CHECK(e * e < e);
  }

  TEST_CASE("standard part and valuation examples") {
    CHECK(E("(1 - e)/2").standard_part() == Rational(1, 2));
    CHECK(E("e/(1+e)").standard_part() == Rational(0));
    CHECK_THROWS_AS(E("1/e").standard_part(), DomainError);
    CHECK(E("e^2*3/(2*e)").valuation() == 1);
    CHECK(EpsScalar(5).valuation() == 0);
    CHECK(E("1/e").valuation() == -1);
    CHECK_THROWS_AS(EpsScalar(0).valuation(), DomainError);
  }

  TEST_CASE("canonical form") {
    // Common e powers cancel and the lowest coefficient of den becomes 1.
    const EpsScalar a = E("(2*e + 2*e^2)/(4*e)");
    CHECK(a == E("(1 + e)/2"));
    CHECK(a.den().lowest_coeff() == Rational(1));
    CHECK(E("(1 - e^2)/(1 + e)") == E("1 - e"));
    CHECK(EpsScalar(0).den() == Polynomial(Rational(1)));
  }

  TEST_CASE("scalar text") {
    CHECK(parse_rational_scalar("1/4") == Rational(1, 4));
    CHECK(parse_rational_scalar("(1 + 2)/6") == Rational(1, 2));
    CHECK_THROWS_AS(parse_rational_scalar("e"), ParseError);
    CHECK_THROWS_AS(parse_eps_scalar("1 +"), ParseError);
    CHECK_THROWS_AS(parse_eps_scalar("1/0"), DivisionByZero);
    CHECK(to_text(E("e^2/(1+e)")) == "e^2/(1 + e)");
    CHECK(to_text(E("(1 - e)/2")) == "1/2 - 1/2*e");
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      const EpsScalar a = oracle::random_eps(rng);
      CHECK(parse_eps_scalar(to_text(a)) == a);
    }
  }

  TEST_CASE("rational arithmetic agrees with an independent big-rational type") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
      const Rational a = oracle::random_rational(rng, 1000), b = oracle::random_rational(rng, 1000);
      const Q qa = oracle::to_q(a), qb = oracle::to_q(b);
      CHECK(oracle::to_q(a + b) == qa + qb);
      CHECK(oracle::to_q(a - b) == qa - qb);
      CHECK(oracle::to_q(a * b) == qa * qb);
      if (!b.is_zero()) CHECK(oracle::to_q(a / b) == qa / qb);
      CHECK((a < b) == (qa < qb));
    }
  }

  TEST_CASE("infinitesimal arithmetic is evaluation-compatible and valuation-ordered") {
    // Evaluation at a tiny rational point is a ring morphism wherever denominators survive,
    // and the sign there equals the sign in the valuation order.
    std::mt19937_64 rng(12);
    const Q t = oracle::tiny();
    for (int i = 0; i < 1000; ++i) {
      const EpsScalar a = oracle::random_eps(rng), b = oracle::random_eps(rng);
      const Q qa = oracle::eval_at(a, t), qb = oracle::eval_at(b, t);
      CHECK(oracle::eval_at(a + b, t) == qa + qb);
      CHECK(oracle::eval_at(a - b, t) == qa - qb);
      CHECK(oracle::eval_at(a * b, t) == qa * qb);
      if (!b.is_zero()) CHECK(oracle::eval_at(a / b, t) == qa / qb);
      CHECK(a.sign() == oracle::sign_of(qa));
      CHECK((a < b) == (qa < qb));
    }
  }

  TEST_CASE_TEMPLATE("ordered field laws", F, Rational, EpsScalar) {
    std::mt19937_64 rng(13);
    auto draw = [&]() -> F {
      if constexpr (std::is_same_v<F, Rational>) {
        return oracle::random_rational(rng, 50);
      } else {
        return oracle::random_eps(rng);
      }
    };
    for (int i = 0; i < 400; ++i) {
      const F a = draw(), b = draw(), c = draw();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + F(0) == a);
      CHECK(a * F(1) == a);
      CHECK(a - a == F(0));
      if (!(b == F(0))) {
        CHECK((a / b) * b == a);
        CHECK(b * (F(1) / b) == F(1));
      }
      const int trichotomy = int(a < b) + int(a == b) + int(a > b);
      CHECK(trichotomy == 1);
      if (a <= b && c > F(0)) CHECK(a * c <= b * c);
      if (a <= b) CHECK(a + c <= b + c);
    }
  }

  TEST_CASE("standard part is a ring morphism on finite elements") {
    std::mt19937_64 rng(14);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
      const EpsScalar a = oracle::random_eps(rng), b = oracle::random_eps(rng);
      auto finite = [](const EpsScalar& x) { return x.is_zero() || x.valuation() >= 0; };
      if (!finite(a) || !finite(b)) continue;
      ++checked;
      CHECK((a + b).standard_part() == a.standard_part() + b.standard_part());
      CHECK((a * b).standard_part() == a.standard_part() * b.standard_part());
    }
    CHECK(checked > 300);
  }

  TEST_CASE("e lies strictly between 0 and every positive rational") {
    std::mt19937_64 rng(15);
    const EpsScalar e = EpsScalar::eps();
    for (int i = 0; i < 500; ++i) {
      std::uniform_int_distribution<long> den(1, 1000000000L);
      const Rational q(1, den(rng));
      CHECK(EpsScalar(0) < e);
      CHECK(e < EpsScalar(q));
    }
  }

  TEST_CASE("field tags") {
    static_assert(OrderedField<Rational>);
    static_assert(OrderedField<EpsScalar>);
    CHECK(field_tag_of<Rational>() == FieldTag::rational);
    CHECK(field_tag_of<EpsScalar>() == FieldTag::infinitesimal);
  }
}
