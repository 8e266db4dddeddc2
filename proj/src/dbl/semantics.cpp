#include "bayesext/dbl/semantics.hpp"

#include "bayesext/error.hpp"

namespace bayesext::dbl {

namespace {

Element eval(ExtensionTower& tower, const Valuation& v, const Proposition& p) {
  switch (p.kind()) {
    case Kind::bot:
      return tower.latest().algebra->bottom();
    case Kind::atom: {
      if (p.is_element_literal()) return tower.forward(parse_tower_element(tower, p.name()));
      auto it = v.find(p.name());
      if (it == v.end()) throw ValidationError("no value for atom '" + p.name() + "'");
      return tower.forward(it->second);
    }
    case Kind::impl: {
      const Element a = eval(tower, v, p.left());
      const Element b = eval(tower, v, p.right());
      // Evaluating b may have extended the tower.
      return join(complement(tower.forward(a)), b);
    }
    case Kind::cond: {
      const Element a = eval(tower, v, p.left());
      const Element b = eval(tower, v, p.right());
      return tower.conditional(a, b);
    }
  }
  throw std::logic_error("unknown proposition kind");
}

}  // namespace

Element evaluate(ExtensionTower& tower, const Valuation& v, const Proposition& p) {
  return tower.forward(eval(tower, v, p));
}

std::vector<Element> evaluate_sequent(ExtensionTower& tower, const Valuation& v, const Sequent& s) {
  std::vector<Element> out;
  out.reserve(s.size());
  for (const Proposition& p : s) out.push_back(evaluate(tower, v, p));
  for (Element& e : out) e = tower.forward(e);
  return out;
}

bool holds(ExtensionTower& tower, const Valuation& v, const Sequent& s) {
  for (const Element& e : evaluate_sequent(tower, v, s)) {
    if (e.is_top()) return true;
  }
  return false;
}

}  // namespace bayesext::dbl
