#include "bayesext/dbl/search.hpp"

#include <random>
#include <set>
#include <sstream>

#include "bayesext/dbl/parser.hpp"
#include "bayesext/error.hpp"

namespace bayesext::dbl {

namespace {

std::vector<std::string> atoms_of(const Sequent& s) {
  std::set<std::string> names;
  for (const Proposition& p : s) {
    auto more = p.atom_names();
    names.insert(more.begin(), more.end());
  }
  return {names.begin(), names.end()};
}

Element random_element(const FiniteBooleanAlgebra& alg, std::mt19937_64& rng) {
  AtomSet bits(alg.size());
  for (std::size_t i = 0; i < alg.size(); ++i) bits[i] = (rng() & 1U) != 0;
  return alg.from_bits(std::move(bits));
}

/// Bottom and top a quarter of the time each, otherwise uniform.
Element biased_element(const FiniteBooleanAlgebra& alg, std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0:
      return alg.bottom();
    case 1:
      return alg.top();
    default:
      return random_element(alg, rng);
  }
}

std::vector<ExtensionTower> search_towers(std::size_t max_atoms) {
  std::vector<ExtensionTower> out;
  for (const std::vector<std::string>& labels :
       {std::vector<std::string>{"p", "q"}, std::vector<std::string>{"a", "c", "d"}}) {
    ExtensionTower base(labels, TowerOptions{max_atoms});
    out.push_back(base);
    for (const Element& b : base.base_algebra().all_elements()) {
      if (b.is_trivial()) continue;
      ExtensionTower t = base;
      t.extend(b);
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

std::string Counterexample::describe(const Sequent& s) const {
  std::ostringstream out;
  out << "base " << tower.base_algebra().print_element(tower.base_algebra().top());
  for (const HistoryEntry& h : tower.history()) out << "; extended on " << tower.print_literal(h.base);
  out << "\n";
  for (const auto& [name, e] : valuation) out << "  " << name << " := " << tower.print_literal(e) << "\n";
  for (std::size_t i = 0; i < s.size() && i < values.size(); ++i) {
    out << "  " << print_prop(s[i]) << " = " << values[i] << "\n";
  }
  return out.str();
}

SearchResult search_counterexample(const Sequent& s, const SearchBudget& budget) {
  SearchResult result;
  const std::vector<std::string> names = atoms_of(s);
  const std::vector<ExtensionTower> towers = search_towers(budget.max_atoms);
  const std::size_t quota = std::max<std::size_t>(1, budget.valuations / towers.size());
  std::mt19937_64 rng(budget.seed);

  for (const ExtensionTower& start : towers) {
    const FiniteBooleanAlgebra& alg = start.algebra(start.latest_index());
    const std::vector<Element> elements = alg.all_elements();
    // Number of valuations, saturating once it exceeds the quota.
    std::size_t total = 1;
    for (std::size_t i = 0; i < names.size() && total <= quota; ++i) total *= elements.size();
    const bool exhaustive = total <= quota;
    const std::size_t count = exhaustive ? total : quota;

    for (std::size_t k = 0; k < count; ++k) {
      Valuation v;
      std::size_t code = k;
      for (const std::string& name : names) {
        if (exhaustive) {
          v.emplace(name, elements[code % elements.size()]);
          code /= elements.size();
        } else {
          v.emplace(name, k == 0 ? alg.bottom() : elements[rng() % elements.size()]);
        }
      }
      ++result.tried;
      ExtensionTower t = start;
      try {
        if (holds(t, v, s)) continue;
        // Certify from a fresh copy.
        ExtensionTower check = start;
        const std::vector<Element> values = evaluate_sequent(check, v, s);
        bool any_top = false;
        for (const Element& e : values) any_top = any_top || e.is_top();
        if (any_top) throw std::logic_error("counterexample did not reproduce");
        Counterexample cx{start, v, {}};
        for (const Element& e : values) cx.values.push_back(check.print_literal(e));
        result.counterexample = std::move(cx);
        return result;
      } catch (const GrowthLimitExceeded&) {
        ++result.skipped;
      }
    }
  }
  return result;
}

std::string SoundnessReport::to_string() const {
  std::ostringstream out;
  out << "valuations: " << valuations << ", hypotheses held: " << hypotheses_held << ", skipped: " << skipped
      << ", violations: " << violations << ", base sizes:";
  for (std::size_t b : base_sizes) out << " " << b;
  out << "\n";
  if (first_violation) out << "first violation: " << *first_violation << "\n";
  return out.str();
}

SoundnessReport check_soundness(const Derivation& d, const SoundnessOptions& options) {
  SoundnessReport report;
  const std::vector<std::vector<std::string>> bases = {{"p", "q"}, {"a", "c", "d"}, {"w", "x", "y", "z"}};
  for (const auto& b : bases) report.base_sizes.push_back(b.size());

  // Which steps rest on a hypothesis.
  std::vector<char> depends(d.steps.size(), 0);
  Sequent everything;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& st = d.steps[i];
    depends[i] = st.rule == Rule::HYP;
    for (std::size_t p : st.premises) {
      if (p >= 1 && p <= i && depends[p - 1]) depends[i] = 1;
    }
    everything.insert(everything.end(), st.conclusion.begin(), st.conclusion.end());
  }
  const std::vector<std::string> names = atoms_of(everything);
  std::mt19937_64 rng(options.seed);

  for (std::size_t round = 0; round < options.valuations; ++round) {
    ExtensionTower tower(bases[round % bases.size()], TowerOptions{options.max_atoms});
    if (rng() % 2 == 0) tower.extend(random_element(tower.base_algebra(), rng));
    const FiniteBooleanAlgebra& alg = tower.algebra(tower.latest_index());
    Valuation v;
    for (const std::string& name : names) v.emplace(name, biased_element(alg, rng));
    ++report.valuations;
    try {
      bool hyps = true;
      for (const Step& st : d.steps) {
        if (st.rule == Rule::HYP && !holds(tower, v, st.conclusion)) hyps = false;
      }
      if (hyps) ++report.hypotheses_held;
      for (std::size_t i = 0; i < d.steps.size(); ++i) {
        if (depends[i] && !hyps) continue;
        if (holds(tower, v, d.steps[i].conclusion)) continue;
        ++report.violations;
        if (!report.first_violation) {
          std::ostringstream msg;
          msg << "step " << (i + 1) << " (" << print_sequent(d.steps[i].conclusion) << ") fails with";
          for (const auto& [name, e] : v) msg << " " << name << "=" << tower.print_literal(e);
          report.first_violation = msg.str();
        }
      }
    } catch (const GrowthLimitExceeded&) {
      ++report.skipped;
    }
  }
  return report;
}

SoundnessReport check_sequent_soundness(const Sequent& s, const SoundnessOptions& options) {
  Derivation d;
  d.steps.push_back(Step{Rule::TAUT, {}, s, {}});
  return check_soundness(d, options);
}

}  // namespace bayesext::dbl
