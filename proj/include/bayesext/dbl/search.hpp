#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bayesext/dbl/derivation.hpp"
#include "bayesext/dbl/semantics.hpp"
#include "bayesext/tower.hpp"

namespace bayesext::dbl {

struct SearchBudget {
  /// Total number of valuations tried.
  std::size_t valuations = 4000;
  /// Growth guard for the towers built during evaluation; overflows count as skipped.
  std::size_t max_atoms = 1024;
  std::uint64_t seed = 1;
};

struct Counterexample {
  ExtensionTower tower;  // the tower before evaluation
  Valuation valuation;
  /// Printed value of every sequent member, on the evaluated tower.
  std::vector<std::string> values;

  std::string describe(const Sequent& s) const;
};

struct SearchResult {
  std::optional<Counterexample> counterexample;
  std::size_t tried = 0;
  std::size_t skipped = 0;
};

/// Refutation search over towers on 2- and 3-atom bases (no extension, then one extension
/// on each nontrivial base element), with valuations enumerated bottom-first or sampled.
/// A returned counterexample has been re-evaluated from scratch and fails holds().
SearchResult search_counterexample(const Sequent& s, const SearchBudget& budget = {});

struct SoundnessOptions {
  std::size_t valuations = 500;
  std::size_t max_atoms = 1024;
  std::uint64_t seed = 7;
};

struct SoundnessReport {
  std::size_t valuations = 0;
  /// Valuations under which every hypothesis held.
  std::size_t hypotheses_held = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::vector<std::size_t> base_sizes;
  std::optional<std::string> first_violation;

  bool passed() const { return violations == 0; }
  std::string to_string() const;
};

/// For sampled towers over the bases {p,q}, {a,c,d}, {w,x,y,z} and valuations biased toward
/// bottom and top: steps that do not depend on a hypothesis must hold, and when every HYP
/// step holds every other step must hold too.
SoundnessReport check_soundness(const Derivation& d, const SoundnessOptions& options = {});

/// Soundness sampling for one sequent with no hypotheses.
SoundnessReport check_sequent_soundness(const Sequent& s, const SoundnessOptions& options = {});

}  // namespace bayesext::dbl
