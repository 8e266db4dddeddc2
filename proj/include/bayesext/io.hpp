#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bayesext/prob.hpp"
#include "bayesext/tower.hpp"

namespace bayesext {

/// Whole file as a string; throws Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// `{"atoms": ["a", "c", "d"]}`; throws ValidationError on a malformed document.
std::vector<std::string> parse_algebra_json(std::string_view text);

/// Dump with the base labels, guard, history (replayable) and a per-stage description.
std::string tower_to_json(const ExtensionTower& tower);

/// Rebuilds a tower by replaying the dumped history; checks the stage sizes against the dump.
ExtensionTower tower_from_json(std::string_view text);

/// `{"masses": {"a": "1/4", ...}}` on the base algebra. Masses are strings in the scalar
/// grammar or integers.
template <OrderedField F>
Distribution<F> parse_distribution_json(const FiniteBooleanAlgebra& algebra, std::string_view text);

extern template Distribution<Rational> parse_distribution_json(const FiniteBooleanAlgebra&,
                                                               std::string_view);
extern template Distribution<EpsScalar> parse_distribution_json(const FiniteBooleanAlgebra&,
                                                                std::string_view);

}  // namespace bayesext
