#include "bayesext/dbl/derivation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "bayesext/dbl/parser.hpp"
#include "bayesext/error.hpp"

namespace bayesext::dbl {

namespace {

using Bindings = std::map<std::string, Proposition>;

const std::vector<std::pair<Rule, std::string>>& rule_table() {
  static const std::vector<std::pair<Rule, std::string>> table = {
      {Rule::HYP, "HYP"},     {Rule::TAUT, "TAUT"},           {Rule::MP, "MP"},
      {Rule::mP, "mP"},       {Rule::mC, "mC"},               {Rule::mW, "mW"},
      {Rule::AxInfCond, "AxInfCond"}, {Rule::AxK, "AxK"},     {Rule::AxCondInf, "AxCondInf"},
      {Rule::AxNeg, "AxNeg"}, {Rule::AxInd, "AxInd"}};
  return table;
}

Sequent without(const Sequent& s, std::size_t i) {
  Sequent out = s;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Sequent concat(Sequent a, const Sequent& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Every requested witness must agree with the bindings the rule produced.
std::string check_subst(const Bindings& requested, const Bindings& found) {
  for (const auto& [k, v] : requested) {
    auto it = found.find(k);
    if (it == found.end()) return "substitution names '" + k + "', which this rule does not bind";
    if (!(it->second == v)) {
      return "substitution " + k + " := " + print_prop(v) + " does not match " + print_prop(it->second);
    }
  }
  return {};
}

bool subst_ok(const Bindings& requested, const Bindings& found) { return check_subst(requested, found).empty(); }

const std::vector<std::string> kMetas = {"X", "Y", "Z"};

void collect_letters(const Proposition& p, std::map<Proposition, std::size_t>& letters) {
  switch (p.kind()) {
    case Kind::bot:
      return;
    case Kind::atom:
    case Kind::cond:
      letters.emplace(p, letters.size());
      return;
    case Kind::impl:
      collect_letters(p.left(), letters);
      collect_letters(p.right(), letters);
      return;
  }
}

/// Compiled form for truth tables: leaves are letter indices, -1 is bottom.
struct TruthNode {
  int letter;  // >= 0 letter, -1 bottom, -2 implication
  int left = -1;
  int right = -1;
};

int compile(const Proposition& p, const std::map<Proposition, std::size_t>& letters,
            std::vector<TruthNode>& out) {
  if (p.is_bot()) {
    out.push_back({-1});
  } else if (!p.is_impl()) {
    out.push_back({static_cast<int>(letters.at(p))});
  } else {
    const int l = compile(p.left(), letters, out);
    const int r = compile(p.right(), letters, out);
    out.push_back({-2, l, r});
  }
  return static_cast<int>(out.size()) - 1;
}

}  // namespace

std::string rule_name(Rule r) {
  for (const auto& [rule, name] : rule_table()) {
    if (rule == r) return name;
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (const auto& [rule, n] : rule_table()) {
    if (n == name) return rule;
  }
  throw ValidationError("unknown rule '" + std::string(name) + "'");
}

bool match_schema(const Proposition& pattern, const Proposition& target,
                  const std::vector<std::string>& metas, Bindings& bindings) {
  if (pattern.is_atom() && std::find(metas.begin(), metas.end(), pattern.name()) != metas.end()) {
    auto [it, inserted] = bindings.emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (pattern.kind() != target.kind()) return false;
  switch (pattern.kind()) {
    case Kind::bot:
      return true;
    case Kind::atom:
      return pattern.name() == target.name();
    case Kind::impl:
    case Kind::cond:
      return match_schema(pattern.left(), target.left(), metas, bindings) &&
             match_schema(pattern.right(), target.right(), metas, bindings);
  }
  return false;
}

Proposition instantiate(const Proposition& pattern, const Bindings& bindings) {
  switch (pattern.kind()) {
    case Kind::bot:
      return pattern;
    case Kind::atom: {
      auto it = bindings.find(pattern.name());
      return it == bindings.end() ? pattern : it->second;
    }
    case Kind::impl:
      return Proposition::impl(instantiate(pattern.left(), bindings), instantiate(pattern.right(), bindings));
    case Kind::cond:
      return Proposition::cond(instantiate(pattern.left(), bindings), instantiate(pattern.right(), bindings));
  }
  return pattern;
}

Proposition axiom_schema(Rule r) {
  switch (r) {
    case Rule::AxK:
      return parse_prop("[X](Y -> Z) -> ([X]Y -> [X]Z)");
    case Rule::AxCondInf:
      return parse_prop("[X]Y -> (X -> Y)");
    case Rule::AxNeg:
      return parse_prop("[X]~Y <-> ~[X]Y");
    default:
      throw ValidationError(rule_name(r) + " is not an axiom schema");
  }
}

bool is_tautology(const Proposition& p, std::size_t max_letters) {
  std::map<Proposition, std::size_t> letters;
  collect_letters(p, letters);
  if (letters.size() > max_letters) {
    throw ValidationError("too many opaque letters (" + std::to_string(letters.size()) + ") for a truth table");
  }
  std::vector<TruthNode> nodes;
  const int root = compile(p, letters, nodes);
  std::vector<char> value(nodes.size());
  const std::uint64_t rows = std::uint64_t{1} << letters.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const TruthNode& n = nodes[i];
      if (n.letter >= 0) {
        value[i] = static_cast<char>((row >> n.letter) & 1U);
      } else if (n.letter == -1) {
        value[i] = 0;
      } else {
        value[i] = static_cast<char>(!value[n.left] || value[n.right]);
      }
    }
    if (!value[root]) return false;
  }
  return true;
}

std::string check_step(const Step& step, const std::vector<const Sequent*>& premises) {
  const Sequent& c = step.conclusion;
  auto need = [&](std::size_t n) -> std::string {
    if (premises.size() != n) {
      return rule_name(step.rule) + " takes " + std::to_string(n) + " premise(s), got " +
             std::to_string(premises.size());
    }
    return {};
  };
  auto no_subst = [&]() -> std::string {
    return step.subst.empty() ? std::string() : rule_name(step.rule) + " takes no substitution";
  };
  if (c.empty()) return "empty conclusion";

  switch (step.rule) {
    case Rule::HYP: {
      if (auto e = need(0); !e.empty()) return e;
      return no_subst();
    }
    case Rule::TAUT: {
      if (auto e = need(0); !e.empty()) return e;
      if (auto e = no_subst(); !e.empty()) return e;
      for (const Proposition& p : c) {
        if (is_tautology(p)) return {};
      }
      return "no member of the conclusion is a propositional tautology";
    }
    case Rule::MP: {
      if (auto e = need(2); !e.empty()) return e;
      for (int order = 0; order < 2; ++order) {
        const Sequent& minor = *premises[order];
        const Sequent& major = *premises[1 - order];
        for (std::size_t i = 0; i < minor.size(); ++i) {
          for (std::size_t j = 0; j < major.size(); ++j) {
            const Proposition& m = major[j];
            if (!m.is_impl() || !(m.left() == minor[i])) continue;
            Sequent expect = concat(without(minor, i), without(major, j));
            expect.push_back(m.right());
            if (same_multiset(expect, c) && subst_ok(step.subst, {{"X", minor[i]}, {"Y", m.right()}})) return {};
          }
        }
      }
      return "no X in one premise with X -> Y in the other yields this conclusion";
    }
    case Rule::mP: {
      if (auto e = need(1); !e.empty()) return e;
      if (auto e = no_subst(); !e.empty()) return e;
      return same_multiset(*premises[0], c) ? std::string() : "conclusion is not a permutation of the premise";
    }
    case Rule::mC: {
      if (auto e = need(1); !e.empty()) return e;
      if (auto e = no_subst(); !e.empty()) return e;
      const Sequent& p = *premises[0];
      if (p.size() == c.size() + 1) {
        for (const Proposition& x : c) {
          Sequent expect = c;
          expect.push_back(x);
          if (same_multiset(expect, p)) return {};
        }
      }
      return "conclusion does not drop exactly one duplicated member of the premise";
    }
    case Rule::mW: {
      if (auto e = need(1); !e.empty()) return e;
      if (auto e = no_subst(); !e.empty()) return e;
      const Sequent& p = *premises[0];
      if (c.size() == p.size() + 1) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (same_multiset(without(c, i), p)) return {};
        }
      }
      return "conclusion does not add exactly one member to the premise";
    }
    case Rule::AxInfCond: {
      if (auto e = need(1); !e.empty()) return e;
      const Sequent& p = *premises[0];
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (!p[i].is_impl()) continue;
        const Proposition& x = p[i].left();
        const Proposition& y = p[i].right();
        Sequent expect = without(p, i);
        expect.push_back(Proposition::neg(x));
        expect.push_back(Proposition::cond(x, y));
        if (same_multiset(expect, c) && subst_ok(step.subst, {{"X", x}, {"Y", y}})) return {};
      }
      return "expected the premise with X -> Y replaced by ~X || [X]Y";
    }
    case Rule::AxK:
    case Rule::AxCondInf:
    case Rule::AxNeg: {
      if (auto e = need(0); !e.empty()) return e;
      if (c.size() != 1) return "an axiom instance has exactly one member";
      Bindings b;
      if (!match_schema(axiom_schema(step.rule), c[0], kMetas, b)) {
        return "not an instance of " + print_prop(axiom_schema(step.rule));
      }
      return check_subst(step.subst, b);
    }
    case Rule::AxInd: {
      if (auto e = need(2); !e.empty()) return e;
      for (std::size_t k = 0; k < c.size(); ++k) {
        auto eq = c[k].as_iff();
        if (!eq || !eq->first.is_cond()) continue;
        const Proposition& y = eq->first.left();
        const Proposition& z = eq->first.right();
        if (!(eq->second == z)) continue;
        const Sequent gamma = without(c, k);
        for (int order = 0; order < 2; ++order) {
          const Sequent& first = *premises[order];   // Y <-> ~X
          const Sequent& second = *premises[1 - order];  // [X]Z <-> Z
          for (std::size_t i = 0; i < first.size(); ++i) {
            auto e1 = first[i].as_iff();
            if (!e1 || !(e1->first == y)) continue;
            auto x = e1->second.as_neg();
            if (!x || !same_multiset(without(first, i), gamma)) continue;
            const Proposition want = Proposition::iff(Proposition::cond(*x, z), z);
            for (std::size_t j = 0; j < second.size(); ++j) {
              if (second[j] == want && same_multiset(without(second, j), gamma) &&
                  subst_ok(step.subst, {{"X", *x}, {"Y", y}, {"Z", z}})) {
                return {};
              }
            }
          }
        }
      }
      return "expected premises G || Y <-> ~X and G || [X]Z <-> Z concluding G || [Y]Z <-> Z";
    }
  }
  return "unknown rule";
}

bool DerivationReport::valid() const {
  if (!conclusion_ok) return false;
  return std::all_of(steps.begin(), steps.end(), [](const StepResult& s) { return s.ok; });
}

std::string DerivationReport::to_string() const {
  std::ostringstream out;
  for (const StepResult& s : steps) {
    out << "step " << s.number << ": " << (s.ok ? "ok" : "REJECTED");
    if (!s.message.empty()) out << " (" << s.message << ")";
    out << "\n";
  }
  if (!conclusion_ok) out << "conclusion: " << conclusion_message << "\n";
  out << (valid() ? "derivation valid" : "derivation invalid") << "\n";
  return out.str();
}

DerivationReport check_derivation(const Derivation& d) {
  DerivationReport report;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& step = d.steps[i];
    StepResult r;
    r.number = i + 1;
    std::vector<const Sequent*> prem;
    std::string error;
    for (std::size_t p : step.premises) {
      if (p == 0 || p > i) {
        error = "premise " + std::to_string(p) + " is not an earlier step";
        break;
      }
      prem.push_back(&d.steps[p - 1].conclusion);
    }
    if (error.empty()) {
      try {
        error = check_step(step, prem);
      } catch (const Error& e) {
        error = e.what();
      }
    }
    r.ok = error.empty();
    r.message = error.empty() ? rule_name(step.rule) : rule_name(step.rule) + ": " + error;
    report.steps.push_back(std::move(r));
  }
  if (d.steps.empty()) {
    report.conclusion_ok = false;
    report.conclusion_message = "derivation has no steps";
  } else if (d.proves && !same_multiset(*d.proves, d.steps.back().conclusion)) {
    report.conclusion_ok = false;
    report.conclusion_message = "last step concludes " + print_sequent(d.steps.back().conclusion) +
                                ", expected " + print_sequent(*d.proves);
  }
  return report;
}

Derivation parse_derivation(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("derivation JSON: ") + e.what(), e.byte);
  }
  Derivation d;
  const nlohmann::json* steps = &j;
  if (j.is_object()) {
    d.name = j.value("name", "");
    d.description = j.value("description", "");
    if (j.contains("proves")) d.proves = parse_sequent(j.at("proves").get<std::string>());
    if (!j.contains("steps")) throw ValidationError("derivation object needs \"steps\"");
    steps = &j.at("steps");
  }
  if (!steps->is_array()) throw ValidationError("derivation steps must be an array");
  for (const auto& s : *steps) {
    Step step;
    try {
      step.rule = parse_rule(s.at("rule").get<std::string>());
      if (s.contains("premises")) step.premises = s.at("premises").get<std::vector<std::size_t>>();
      step.conclusion = parse_sequent(s.at("conclusion").get<std::string>());
      if (s.contains("subst")) {
        for (const auto& [k, v] : s.at("subst").items()) step.subst.emplace(k, parse_prop(v.get<std::string>()));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("derivation step " + std::to_string(d.steps.size() + 1) + ": " + e.what());
    }
    d.steps.push_back(std::move(step));
  }
  return d;
}

std::string derivation_to_json(const Derivation& d) {
  nlohmann::json j;
  if (!d.name.empty()) j["name"] = d.name;
  if (!d.description.empty()) j["description"] = d.description;
  if (d.proves) j["proves"] = print_sequent(*d.proves);
  j["steps"] = nlohmann::json::array();
  for (const Step& s : d.steps) {
    nlohmann::json js;
    js["rule"] = rule_name(s.rule);
    if (!s.premises.empty()) js["premises"] = s.premises;
    js["conclusion"] = print_sequent(s.conclusion);
    for (const auto& [k, v] : s.subst) js["subst"][k] = print_prop(v);
    j["steps"].push_back(std::move(js));
  }
  return j.dump(2);
}

}  // namespace bayesext::dbl
