#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bayesext/tower.hpp"

namespace bayesext {

struct LawResult {
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::optional<std::string> counterexample;
};

struct AxiomReport {
  std::size_t atoms = 0;
  bool exhaustive = false;
  std::vector<LawResult> laws;  // B, D, I, Ind

  bool passed() const;
  std::string to_string() const;
};

struct AxiomCheckOptions {
  /// Stages up to this many atoms are checked over all elements.
  std::size_t exhaustive_bound = 8;
  /// Above the bound: number of sampled x and y elements; 4x as many (y, z) pairs for law B.
  std::size_t samples = 48;
  std::uint64_t seed = 1;
};

/// Checks the laws of a Bayesian algebra over elements of the latest stage:
///   B   y -> [x]y preserves meet and complement and sends top to top
///   D   x <= y and x nonempty imply [x]y = top
///   I   x & [x]y = x & y
///   Ind [x][x]y = [~x][x]y = [x]y
/// The tower is not modified; each x is evaluated on a private fork.
AxiomReport check_bayes_axioms(const ExtensionTower& tower, const AxiomCheckOptions& options = {});

}  // namespace bayesext
