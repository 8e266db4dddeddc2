#include <random>

#include "bayesext/boolalg.hpp"
#include "bayesext/error.hpp"
#include "doctest.h"

using namespace bayesext;

namespace {

std::uint64_t mask_of(const Element& x) {
  std::uint64_t m = 0;
  for (AtomId a : x.atom_ids()) m |= std::uint64_t{1} << a.index;
  return m;
}

}  // namespace

TEST_SUITE("boolalg") {
  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FiniteBooleanAlgebra({}), ValidationError);
    CHECK_THROWS_AS(FiniteBooleanAlgebra({"a", "c", "a"}), ValidationError);
    FiniteBooleanAlgebra e({"a", "c", "d"});
    CHECK(e.size() == 3);
    CHECK(e.top().count() == 3);
    CHECK(e.bottom().is_bottom());
  }

  TEST_CASE("operation examples") {
    FiniteBooleanAlgebra e({"a", "c", "d"});
    CHECK(meet(e.parse_element("{a,c}"), e.parse_element("{c,d}")) == e.parse_element("{c}"));
    CHECK(complement(e.top()) == e.bottom());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
      const Element x = e.from_mask(rng() % 8);
      CHECK((x | ~x) == e.top());
    }
    CHECK(leq(e.parse_element("{a}"), e.parse_element("{a,d}")));
    CHECK_FALSE(leq(e.parse_element("{c}"), e.parse_element("{a,d}")));
  }

  TEST_CASE("mixed algebras are rejected") {
    FiniteBooleanAlgebra e({"a", "c"}), f({"a", "c"});
    CHECK(e.id() != f.id());
    CHECK_THROWS_AS(meet(e.top(), f.top()), AlgebraMismatch);
    CHECK_THROWS_AS(join(e.top(), f.bottom()), AlgebraMismatch);
    CHECK_THROWS_AS(leq(e.top(), f.top()), AlgebraMismatch);
    CHECK_THROWS_AS(e.require_owned(f.top()), AlgebraMismatch);
  }

  TEST_CASE("element text") {
    FiniteBooleanAlgebra e({"a", "c", "d"});
    CHECK(e.parse_element("{}") == e.bottom());
    CHECK(e.print_element(e.parse_element("{d,a}")) == "{a,d}");
    CHECK(e.parse_element("{ a , c }") == e.parse_element("{a,c}"));
    CHECK(e.parse_element("{#2}") == e.parse_element("{d}"));
    CHECK_THROWS_AS(e.parse_element("{b}"), ValidationError);
    CHECK_THROWS_AS(e.parse_element("a,c"), ParseError);
    for (const Element& x : e.all_elements()) CHECK(e.parse_element(e.print_element(x)) == x);

    FiniteBooleanAlgebra p({"(a,d)", "(d,a)", "c"});
    CHECK(p.parse_element("{(d,a),c}").count() == 2);
    CHECK(p.print_element(p.top()) == "{(a,d),(d,a),c}");
  }

  TEST_CASE("Boolean algebra axioms hold exhaustively up to 4 atoms") {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
      FiniteBooleanAlgebra e(labels);
      const auto all = e.all_elements();
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      for (const Element& x : all) {
        CHECK((x & ~x) == e.bottom());
        CHECK((x | ~x) == e.top());
        CHECK(~~x == x);
        CHECK(mask_of(~x) == (full & ~mask_of(x)));
        for (const Element& y : all) {
          // Set oracle on bit masks.
          CHECK(mask_of(x & y) == (mask_of(x) & mask_of(y)));
          CHECK(mask_of(x | y) == (mask_of(x) | mask_of(y)));
          CHECK(leq(x, y) == ((mask_of(x) & ~mask_of(y)) == 0));
          CHECK((x & y) == (y & x));
          CHECK((x | y) == (y | x));
          CHECK((x & (x | y)) == x);
          CHECK((x | (x & y)) == x);
          CHECK(~(x & y) == (~x | ~y));
          for (const Element& z : all) {
            CHECK(((x & y) & z) == (x & (y & z)));
            CHECK(((x | y) | z) == (x | (y | z)));
            CHECK((x & (y | z)) == ((x & y) | (x & z)));
            CHECK((x | (y & z)) == ((x | y) & (x | z)));
          }
        }
      }
    }
  }

  TEST_CASE("Boolean laws on a larger algebra, sampled") {
    std::vector<std::string> labels;
    for (int i = 0; i < 40; ++i) labels.push_back("x" + std::to_string(i));
    FiniteBooleanAlgebra e(labels);
    std::mt19937_64 rng(2);
    for (int i = 0; i < 500; ++i) {
      const Element x = e.from_mask(rng() >> 24), y = e.from_mask(rng() >> 24), z = e.from_mask(rng() >> 24);
      CHECK((x & (y | z)) == ((x & y) | (x & z)));
      CHECK(~(x | y) == (~x & ~y));
      CHECK((x & (x | y)) == x);
    }
  }

  TEST_CASE("crop") {
    FiniteBooleanAlgebra e({"a", "c", "d"});
    std::vector<Element> atoms;
    for (std::size_t i = 0; i < e.size(); ++i) atoms.push_back(e.atom(AtomId{i}));
    CHECK(crop(atoms, e.top()) == atoms);
    CHECK(crop(atoms, e.bottom()).empty());
    const std::vector<Element> f = {e.parse_element("{a}"), e.parse_element("{c}"), e.parse_element("{a,c}")};
    CHECK(crop(f, e.parse_element("{a,c}")) == f);
    // Monotone in x and always a subfamily.
    const auto all = e.all_elements();
    for (const Element& x : all)
      for (const Element& y : all) {
        const auto cx = crop(all, x), cy = crop(all, y);
        for (const Element& z : cx) CHECK(leq(z, x));
        if (leq(x, y))
          for (const Element& z : cx) CHECK(std::find(cy.begin(), cy.end(), z) != cy.end());
      }
  }
}
