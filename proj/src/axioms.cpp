#include "bayesext/axioms.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>
#include <sstream>

namespace bayesext {

namespace {

std::uint64_t to_mask(const AtomSet& bits) {
  std::uint64_t mask = 0;
  boost::to_block_range(bits, &mask);
  return mask;
}

Element random_element(const FiniteBooleanAlgebra& alg, std::mt19937_64& rng) {
  AtomSet bits(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) bits[i] = (rng() & 1U) != 0;
  return alg.from_bits(std::move(bits));
}

struct Recorder {
  LawResult& result;
  template <typename Describe>
  void check(bool ok, Describe&& describe) {
    ++result.checked;
    if (ok) return;
    ++result.failures;
    if (!result.counterexample) result.counterexample = describe();
  }
};

}  // namespace

bool AxiomReport::passed() const {
  for (const auto& law : laws) {
    if (law.failures != 0) return false;
  }
  return true;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  out << "stage atoms: " << atoms << (exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  for (const auto& law : laws) {
    out << "law " << law.law << ": " << (law.failures == 0 ? "pass" : "FAIL") << " (" << law.checked
        << " checks, " << law.failures << " failures)";
    if (law.counterexample) out << " e.g. " << *law.counterexample;
    out << "\n";
  }
  return out.str();
}

AxiomReport check_bayes_axioms(const ExtensionTower& tower, const AxiomCheckOptions& options) {
  const FiniteBooleanAlgebra& alg = tower.algebra(tower.latest_index());
  const std::size_t m = alg.size();
  AxiomReport report;
  report.atoms = m;
  report.exhaustive = m <= options.exhaustive_bound;
  for (const char* name : {"B", "D", "I", "Ind"}) {
    report.laws.emplace_back();
    report.laws.back().law = name;
  }
  Recorder law_b{report.laws[0]}, law_d{report.laws[1]}, law_i{report.laws[2]}, law_ind{report.laws[3]};

  std::vector<Element> xs;
  std::vector<Element> ys;
  if (report.exhaustive) {
    xs = alg.all_elements();
    ys = xs;
  } else {
    std::mt19937_64 rng(options.seed);
    xs = tower.conditioning_domain();
    for (std::size_t i = 0; i < m; ++i) xs.push_back(alg.atom({i}));
    for (std::size_t i = 0; i < options.samples; ++i) xs.push_back(random_element(alg, rng));
    ys = {alg.bottom(), alg.top()};
    for (std::size_t i = 0; i < options.samples; ++i) {
      Element y = random_element(alg, rng);
      ys.push_back(complement(y));
      ys.push_back(std::move(y));
    }
  }
  // Index of ~y inside ys; ys is closed under complement.
  std::map<Element, std::size_t> position;
  for (std::size_t i = 0; i < ys.size(); ++i) position.emplace(ys[i], i);
  std::vector<std::size_t> negation(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) negation[i] = position.at(complement(ys[i]));

  for (const Element& x : xs) {
    ExtensionTower fork = tower;
    // One fresh extension of an m-atom stage creates at most m*m/2 atoms.
    fork.set_max_atoms(std::max(tower.options().max_atoms, m * m / 2 + 1));
    std::vector<Element> r;
    r.reserve(ys.size());
    for (const Element& y : ys) r.push_back(fork.conditional(x, y));
    std::vector<Element> rr, rn;  // [x][x]y and [~x][x]y
    rr.reserve(ys.size());
    rn.reserve(ys.size());
    const Element nx = complement(x);
    for (const Element& ry : r) {
      rr.push_back(fork.conditional(x, ry));
      rn.push_back(fork.conditional(nx, ry));
    }
    const std::size_t top_stage = fork.latest_index();
    for (auto* v : {&r, &rr, &rn}) {
      for (Element& e : *v) e = fork.forward(e);
    }
    const Element xf = fork.forward(x);
    const auto describe = [&](const Element& y, const std::string& what) {
      return "x=" + alg.print_element(x) + " y=" + alg.print_element(y) + ": " + what;
    };

    const FiniteBooleanAlgebra& falg = fork.algebra(top_stage);
    const Element ftop = falg.top();
    std::vector<Element> yf;
    yf.reserve(ys.size());
    for (const Element& y : ys) yf.push_back(fork.forward(y));

    for (std::size_t i = 0; i < ys.size(); ++i) {
      const Element& y = ys[i];
      if (y.is_top()) law_b.check(r[i] == ftop, [&] { return describe(y, "[x]T != T"); });
      law_b.check(r[negation[i]] == complement(r[i]),
                  [&] { return describe(y, "[x]~y != ~[x]y"); });
      if (!x.is_bottom() && leq(x, y)) {
        law_d.check(r[i] == ftop, [&] { return describe(y, "x <= y but [x]y != T"); });
      }
      law_i.check(meet(xf, r[i]) == meet(xf, yf[i]), [&] { return describe(y, "x & [x]y != x & y"); });
      law_ind.check(rr[i] == r[i], [&] { return describe(y, "[x][x]y != [x]y"); });
      law_ind.check(rn[i] == r[i], [&] { return describe(y, "[~x][x]y != [x]y"); });
    }

    // Meet preservation over all pairs of ys.
    if (report.exhaustive && falg.size() <= 64) {
      std::vector<std::uint64_t> rm(r.size()), ym(ys.size());
      for (std::size_t i = 0; i < r.size(); ++i) rm[i] = to_mask(r[i].atoms());
      for (std::size_t i = 0; i < ys.size(); ++i) ym[i] = to_mask(ys[i].atoms());
      std::unordered_map<std::uint64_t, std::size_t> where;
      for (std::size_t i = 0; i < ys.size(); ++i) where.emplace(ym[i], i);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t j = i; j < ys.size(); ++j) {
          auto it = where.find(ym[i] & ym[j]);
          if (it == where.end()) continue;
          law_b.check((rm[i] & rm[j]) == rm[it->second], [&] {
            return describe(ys[i], "[x](y & z) != [x]y & [x]z for z=" + alg.print_element(ys[j]));
          });
        }
      }
    } else {
      std::mt19937_64 pair_rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (report.laws[0].checked + 1)));
      for (std::size_t k = 0; k < 4 * options.samples; ++k) {
        const std::size_t i = pair_rng() % ys.size();
        const std::size_t j = pair_rng() % ys.size();
        const Element both = fork.conditional(x, meet(ys[i], ys[j]));
        law_b.check(fork.forward(both) == fork.forward(meet(r[i], r[j])), [&] {
          return describe(ys[i], "[x](y & z) != [x]y & [x]z for z=" + alg.print_element(ys[j]));
        });
      }
    }
  }
  return report;
}

}  // namespace bayesext
