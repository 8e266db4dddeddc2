#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bayesext/dbl/proposition.hpp"

namespace bayesext::dbl {

enum class Rule { HYP, TAUT, MP, mP, mC, mW, AxInfCond, AxK, AxCondInf, AxNeg, AxInd };

std::string rule_name(Rule r);
/// Throws ValidationError on an unknown name.
Rule parse_rule(std::string_view name);

struct Step {
  Rule rule = Rule::HYP;
  std::vector<std::size_t> premises;  // 1-based step numbers, strictly earlier
  Sequent conclusion;
  /// Optional metavariable witnesses (X, Y, Z); checked when present.
  std::map<std::string, Proposition> subst;
};

struct Derivation {
  std::string name;
  std::string description;
  std::vector<Step> steps;
  /// Expected final sequent; when present the last step must conclude it.
  std::optional<Sequent> proves;
};

/// JSON forms: an array of steps, or {"name", "description", "proves", "steps": [...]}.
/// A step is {"rule": "MP", "premises": [2, 5], "conclusion": "...", "subst": {"X": "..."}}.
Derivation parse_derivation(std::string_view json_text);
std::string derivation_to_json(const Derivation& d);

struct StepResult {
  std::size_t number = 0;
  bool ok = false;
  std::string message;
};

struct DerivationReport {
  std::vector<StepResult> steps;
  bool conclusion_ok = true;
  std::string conclusion_message;

  bool valid() const;
  std::string to_string() const;
};

DerivationReport check_derivation(const Derivation& d);

/// Single step check against already-known premise sequents; empty string when valid.
std::string check_step(const Step& step, const std::vector<const Sequent*>& premises);

/// Propositional tautology test treating atoms and [X]Y subformulas as opaque letters.
/// Throws ValidationError beyond `max_letters` distinct letters.
bool is_tautology(const Proposition& p, std::size_t max_letters = 20);

/// Schema matching where atoms named in `metas` are metavariables.
bool match_schema(const Proposition& pattern, const Proposition& target,
                  const std::vector<std::string>& metas, std::map<std::string, Proposition>& bindings);

/// Axiom schemas over metavariables X, Y, Z.
Proposition axiom_schema(Rule r);

/// Instance of an axiom schema (AxK, AxCondInf, AxNeg) under the given bindings.
Proposition instantiate(const Proposition& pattern, const std::map<std::string, Proposition>& bindings);

}  // namespace bayesext::dbl
