#include <random>
#include <set>

#include "bayesext/axioms.hpp"
#include "bayesext/cantor.hpp"
#include "bayesext/error.hpp"
#include "bayesext/io.hpp"
#include "bayesext/schedule.hpp"
#include "bayesext/tower.hpp"
#include "doctest.h"
#include "tower_fixtures.hpp"

using namespace bayesext;

namespace {

using PairSet = std::set<std::pair<std::size_t, std::size_t>>;

std::vector<std::string> labels_of(const ExtensionTower& t, std::size_t stage) {
  return t.algebra(stage).labels();
}

/// Pairs of latest-stage atoms kept when extending on b, computed from the literal definition:
/// (x, y) with x under ~b, y under b, both in the domain where phi(., b) was totalized, is
/// excluded when x & phi(y, b) and y & phi(x, ~b) are both empty; every pair of atoms from
/// x and y, in both orders, is then removed. On the stage s created by conditioning b_s,
/// phi(z, b_s) = z | t_s(z) for z under b_s. Returns false when a stage is too large.
bool survivors_by_definition(const ExtensionTower& t, const Element& b, PairSet& out) {
  const std::size_t n = t.latest_index();
  const std::size_t size = t.algebra(n).size();
  PairSet removed;
  for (const HistoryEntry& h : t.history()) {
    if (h.trivial) continue;
    const std::size_t s = h.stage + 1;
    const Stage& st = t.stage(s);
    const Element img = t.psi(s, n, *st.base_image);
    Element side = *st.base_image;
    if (img == b) {
    } else if (img == ~b) {
      side = ~side;
    } else {
      continue;
    }
    if (st.size() > 12) return false;
    std::vector<std::size_t> under, over;
    for (std::size_t a = 0; a < st.size(); ++a) (side.contains(AtomId{a}) ? under : over).push_back(a);
    for (std::uint64_t my = 1; my < (std::uint64_t{1} << under.size()); ++my) {
      AtomSet ybits(st.size());
      for (std::size_t k = 0; k < under.size(); ++k)
        if (my >> k & 1) ybits.set(under[k]);
      const Element ys = st.algebra->from_bits(ybits);
      const Element y = t.psi(s, n, ys);
      const Element phi_y = t.psi(s, n, ys | st.transpose(ys));
      for (std::uint64_t mx = 1; mx < (std::uint64_t{1} << over.size()); ++mx) {
        AtomSet xbits(st.size());
        for (std::size_t k = 0; k < over.size(); ++k)
          if (mx >> k & 1) xbits.set(over[k]);
        const Element xs = st.algebra->from_bits(xbits);
        const Element x = t.psi(s, n, xs);
        const Element phi_x = t.psi(s, n, xs | st.transpose(xs));
        if (!(x & phi_y).is_bottom() || !(y & phi_x).is_bottom()) continue;
        for (AtomId w : x.atom_ids())
          for (AtomId u : y.atom_ids()) {
            removed.insert({w.index, u.index});
            removed.insert({u.index, w.index});
          }
      }
    }
  }
  out.clear();
  for (std::size_t w = 0; w < size; ++w)
    for (std::size_t u = 0; u < size; ++u)
      if (b.contains(AtomId{w}) != b.contains(AtomId{u}) && !removed.count({w, u})) out.insert({w, u});
  return true;
}

PairSet lineage_pairs(const Stage& s) {
  PairSet out;
  for (const AtomLineage& l : s.lineage) out.insert({l.first, l.second});
  return out;
}

}  // namespace

TEST_SUITE("tower") {
  TEST_CASE("first extension of the three-atom example") {
    ExtensionTower t({"a", "c", "d"});
    const Element b = t.base_algebra().parse_element("{a,c}");
    const Stage& s = t.extend(b);
    CHECK(s.kind == StageKind::pair);
    CHECK(s.size() == 4);
    std::vector<std::string> labels = labels_of(t, 1);
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"(a,d)", "(c,d)", "(d,a)", "(d,c)"});
    CHECK(t.print(t.psi(0, 1, t.base_algebra().parse_element("{a}"))) == "{(a,d)}");
    CHECK(t.print(*s.base_image) == "{(a,d),(c,d)}");
    CHECK(s.transpose(*s.base_image) == ~*s.base_image);
    const auto steps = t.step_map(0);
    CHECK(steps[0].size() == 1);
    CHECK(steps[2].size() == 2);
  }

  TEST_CASE("trivial extensions copy the stage") {
    ExtensionTower t({"a", "c", "d"});
    const Stage& s = t.extend(t.base_algebra().top());
    CHECK(s.kind == StageKind::identity);
    CHECK(s.size() == 3);
    CHECK(labels_of(t, 1) == labels_of(t, 0));
    const Element x = t.base_algebra().parse_element("{a,d}");
    CHECK(t.print(t.psi(0, 1, x)) == "{a,d}");
    CHECK(t.history().back().trivial);
  }

  TEST_CASE("exclusions on re-conditioning") {
    ExtensionTower t({"a", "c", "d"});
    const Element b = t.base_algebra().parse_element("{a,c}");
    t.extend(b);
    const Element b1 = t.forward(b);
    const Stage s1 = t.stage(1);
    // Fresh base: nothing excluded. Re-conditioned base: only transposed pairs survive.
    ExtensionTower fresh({"a", "c", "d"});
    const Element fb = fresh.base_algebra().parse_element("{a,c}");
    for (AtomId w : fb.atom_ids())
      for (AtomId u : (~fb).atom_ids()) CHECK_FALSE(fresh.exclusion_test(w, u, fb));
    for (AtomId w : b1.atom_ids())
      for (AtomId u : (~b1).atom_ids()) CHECK(t.exclusion_test(w, u, b1) == (s1.transposition[w.index] != u.index));

    const Stage& s2 = t.extend(b1);
    CHECK(s2.size() == 4);
    for (const auto& targets : t.step_map(1)) CHECK(targets.size() == 1);
    for (const AtomLineage& l : s2.lineage) CHECK(s1.transposition[l.first] == l.second);
  }

  TEST_CASE("exclusions agree with the literal definition") {
    std::mt19937_64 rng(21);
    const std::vector<std::vector<std::string>> bases = {{"a", "b"}, {"a", "c", "d"}, {"p", "q", "r", "s"}};
    int compared = 0, with_exclusions = 0;
    for (int round = 0; round < 240; ++round) {
      const auto& base = bases[round % bases.size()];
      ExtensionTower t = fixtures::random_tower(rng, base, rng() % 4, 64);
      const auto& alg = t.algebra(t.latest_index());
      Element b = alg.bottom();
      if (!t.history().empty() && rng() % 3 != 0)
        b = t.forward(t.history()[rng() % t.history().size()].base);
      else
        b = alg.from_mask(rng() % (std::uint64_t{1} << std::min<std::size_t>(alg.size(), 63)));
      if (rng() % 2) b = ~b;
      if (b.is_trivial()) continue;
      PairSet expected;
      if (!survivors_by_definition(t, b, expected)) continue;
      const std::size_t opposite = b.count() * (alg.size() - b.count()) * 2;
      if (expected.size() > 64) continue;
      ExtensionTower u = t;
      u.extend(b);
      CHECK(lineage_pairs(u.latest()) == expected);
      for (AtomId w : b.atom_ids())
        for (AtomId v : (~b).atom_ids()) CHECK(t.exclusion_test(w, v, b) == !expected.count({w.index, v.index}));
      ++compared;
      if (expected.size() < opposite) ++with_exclusions;
    }
    CHECK(compared > 100);
    CHECK(with_exclusions > 20);
  }

  TEST_CASE("psi is an injective Boolean morphism and composes") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 60; ++round) {
      ExtensionTower t = fixtures::random_tower(rng, {"a", "c", "d"}, 1 + rng() % 3, 64);
      const std::size_t n = t.latest_index();
      for (std::size_t i = 0; i <= n; ++i) {
        const auto& alg = t.algebra(i);
        CHECK(t.psi(i, i, alg.top()) == alg.top());
        CHECK(t.psi(i, n, alg.top()) == t.algebra(n).top());
        CHECK(t.psi(i, n, alg.bottom()).is_bottom());
        std::vector<Element> sample;
        for (int k = 0; k < 12; ++k) {
          AtomSet bits(alg.size());
          for (std::size_t a = 0; a < alg.size(); ++a) bits[a] = rng() % 2;
          sample.push_back(alg.from_bits(bits));
        }
        for (const Element& x : sample) {
          CHECK(t.psi(i, n, ~x) == ~t.psi(i, n, x));
          for (std::size_t j = i; j <= n; ++j) CHECK(t.psi(j, n, t.psi(i, j, x)) == t.psi(i, n, x));
          for (const Element& y : sample) {
            CHECK(t.psi(i, n, x & y) == (t.psi(i, n, x) & t.psi(i, n, y)));
            CHECK((t.psi(i, n, x) == t.psi(i, n, y)) == (x == y));
          }
          const auto back = t.preimage(i, t.psi(i, n, x));
          REQUIRE(back.has_value());
          CHECK(*back == x);
        }
      }
      if (n > 0) CHECK_THROWS_AS(t.psi(n, 0, t.latest().algebra->top()), DomainError);
    }
  }

  TEST_CASE("transposition structure of pair stages") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 60; ++round) {
      ExtensionTower t = fixtures::random_tower(rng, {"a", "c", "d"}, 1 + rng() % 3, 64);
      for (std::size_t i = 1; i < t.stage_count(); ++i) {
        const Stage& s = t.stage(i);
        if (s.kind != StageKind::pair) continue;
        for (std::size_t a = 0; a < s.size(); ++a) {
          const std::size_t b = s.transposition[a];
          CHECK(s.transposition[b] == a);
          CHECK(s.lineage[b].first == s.lineage[a].second);
          CHECK(s.lineage[b].second == s.lineage[a].first);
          const Element& prev = *s.conditioned_base;
          CHECK(prev.contains(AtomId{s.lineage[a].first}) != prev.contains(AtomId{s.lineage[a].second}));
        }
        CHECK(s.transpose(*s.base_image) == ~*s.base_image);
      }
    }
  }

  TEST_CASE("first conditioning yields 2 m m' atoms") {
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t mp = 1; m + mp <= 5; ++mp) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < m + mp; ++i) labels.push_back("x" + std::to_string(i));
        ExtensionTower t(labels);
        AtomSet bits(m + mp);
        for (std::size_t i = 0; i < m; ++i) bits.set(i);
        CHECK(t.extend(t.base_algebra().from_bits(bits)).size() == 2 * m * mp);
      }
  }

  TEST_CASE("conditional examples") {
    ExtensionTower t({"a", "c", "d"});
    const auto& base = t.base_algebra();
    const Element b = base.parse_element("{a,c}");
    const Element y = base.parse_element("{a}");
    CHECK(t.conditional(base.top(), y) == y);
    CHECK(t.conditional(base.bottom(), y) == y);
    CHECK(t.stage_count() == 1);
    const Element r = t.conditional(b, y);
    CHECK(t.stage_count() == 2);
    CHECK((t.forward(b) & r) == t.forward(y));
    CHECK(t.conditional(b, b).is_top());
    CHECK(t.print(r) == "{(a,d),(d,a)}");
    // Already totalized: no further stage.
    t.conditional(b, base.parse_element("{d}"));
    CHECK(t.stage_count() == 2);
  }

  TEST_CASE("stale elements and the growth guard") {
    ExtensionTower t({"a", "c", "d"}), other({"a", "c", "d"});
    CHECK_THROWS_AS(t.forward(other.base_algebra().top()), StaleElement);
    ExtensionTower small({"a", "c", "d"}, TowerOptions{3});
    CHECK_THROWS_AS(small.extend(small.base_algebra().parse_element("{a}")), GrowthLimitExceeded);
    CHECK(small.stage_count() == 1);
  }

  TEST_CASE("towers fork on copy") {
    ExtensionTower t({"a", "c", "d"});
    const Element b = t.base_algebra().parse_element("{a,c}");
    ExtensionTower fork = t;
    fork.extend(b);
    CHECK(t.stage_count() == 1);
    CHECK(fork.stage_count() == 2);
    CHECK(fork.forward(b).count() == 2);
  }

  TEST_CASE("element literals with stage prefixes") {
    ExtensionTower t({"a", "c", "d"});
    t.extend(t.base_algebra().parse_element("{a,c}"));
    const Element x = parse_tower_element(t, "{(a,d),(d,c)}");
    CHECK(t.require_stage_of(x) == 1);
    CHECK(t.print_literal(x) == "@1{(a,d),(d,c)}");
    CHECK(parse_tower_element(t, t.print_literal(x)) == x);
    CHECK(t.require_stage_of(parse_tower_element(t, "{a}")) == 0);
    CHECK(t.require_stage_of(parse_tower_element(t, "@0{a}")) == 0);
    CHECK_THROWS(parse_tower_element(t, "@5{a}"));
    CHECK_THROWS_AS(validate_base_label("a,b"), ValidationError);
    CHECK_THROWS_AS(ExtensionTower({"a b"}), ValidationError);
  }

  TEST_CASE("tower dump round trip") {
    std::mt19937_64 rng(24);
    for (int round = 0; round < 20; ++round) {
      ExtensionTower t = fixtures::random_tower(rng, {"a", "c", "d"}, rng() % 4, 64);
      const std::string text = tower_to_json(t);
      ExtensionTower back = tower_from_json(text);
      CHECK(tower_to_json(back) == text);
      CHECK(back.stage_count() == t.stage_count());
    }
    CHECK_THROWS_AS(tower_from_json("{"), ValidationError);
    CHECK_THROWS_AS(tower_from_json(R"({"max_atoms": 10, "base": ["a","b"], "history": [{"stage": 1, "base": "{a}"}]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_algebra_json(R"({"atoms": []})"), ValidationError);
    CHECK_THROWS_AS(FiniteBooleanAlgebra(parse_algebra_json(R"({"atoms": ["a","a"]})")), ValidationError);
  }

  TEST_CASE("Bayesian laws on small towers") {
    std::mt19937_64 rng(25);
    for (int round = 0; round < 40; ++round) {
      const ExtensionTower t = fixtures::random_tower(rng, round % 2 ? std::vector<std::string>{"a", "b"}
                                                                      : std::vector<std::string>{"a", "c", "d"},
                                                      rng() % 3, 16);
      const AxiomReport r = check_bayes_axioms(t);
      CHECK_MESSAGE(r.passed(), r.to_string());
    }
  }

  TEST_CASE("conditional agrees with the extension-free shortcut where both apply") {
    std::mt19937_64 rng(26);
    int compared = 0;
    for (int round = 0; round < 40; ++round) {
      ExtensionTower t = fixtures::random_tower(rng, {"a", "c", "d"}, 1 + rng() % 3, 64);
      const auto& alg = t.algebra(t.latest_index());
      for (const Element& x : t.conditioning_domain()) {
        for (int k = 0; k < 6; ++k) {
          const Element y = alg.from_mask(rng() % (std::uint64_t{1} << alg.size()));
          const auto shortcut = t.conditional_shortcut(x, y);
          if (!shortcut) continue;
          ExtensionTower fork = t;
          const Element fresh = fork.conditional_fresh(x, y);
          CHECK(fork.forward(*shortcut) == fresh);
          ++compared;
        }
      }
    }
    CHECK(compared > 100);
  }

  TEST_CASE("Cantor schedule") {
    ExtensionTower t({"a", "b"});
    CHECK(schedule_next(t) == schedule_element(t, 0, 0));
    for (std::uint64_t n = 0; n <= 10000; ++n) CHECK(cantor_first(n) <= n);
    // Totality on a small bound: every element of stage 0 is conditioned at some step.
    run_schedule(t, 40);
    std::set<std::string> conditioned;
    for (const HistoryEntry& h : t.history())
      if (auto pre = t.preimage(0, t.forward(h.base))) conditioned.insert(t.print(*pre));
    for (const Element& x : t.base_algebra().all_elements()) CHECK(conditioned.count(t.print(x)) == 1);
  }
}
