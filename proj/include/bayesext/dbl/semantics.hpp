#pragma once

#include <map>
#include <string>
#include <vector>

#include "bayesext/boolalg.hpp"
#include "bayesext/dbl/proposition.hpp"
#include "bayesext/tower.hpp"

namespace bayesext::dbl {

/// Atomic proposition name -> element of some stage of the tower.
using Valuation = std::map<std::string, Element>;

/// Conditional valuation: F -> bottom, X -> Y -> ~X | Y, [X]Y -> tower.conditional.
/// Element literal atoms resolve through parse_tower_element. May extend the tower;
/// the result lives on the latest stage. Throws ValidationError on an unbound atom.
Element evaluate(ExtensionTower& tower, const Valuation& v, const Proposition& p);

/// Values of every member, all on the latest stage.
std::vector<Element> evaluate_sequent(ExtensionTower& tower, const Valuation& v, const Sequent& s);

/// Some member evaluates to top.
bool holds(ExtensionTower& tower, const Valuation& v, const Sequent& s);

}  // namespace bayesext::dbl
