#include "bayesext/prob.hpp"

#include <set>

#include "bayesext/error.hpp"

namespace bayesext {

template <OrderedField F>
bool Distribution<F>::strictly_positive() const {
  for (const F& m : masses_) {
    if (m.sign() <= 0) return false;
  }
  return true;
}

template <OrderedField F>
Distribution<F> base_distribution(const FiniteBooleanAlgebra& algebra, std::vector<F> masses) {
  if (masses.size() != algebra.size()) {
    throw ValidationError("distribution has " + std::to_string(masses.size()) + " masses for " +
                          std::to_string(algebra.size()) + " atoms");
  }
  F total(0);
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i].sign() < 0) {
      throw ValidationError("negative mass " + to_text(masses[i]) + " on atom " + algebra.labels()[i]);
    }
    total += masses[i];
  }
  if (!(total == F(1))) throw ValidationError("masses sum to " + to_text(total) + ", not 1");
  return Distribution<F>(0, algebra.id(), std::move(masses));
}

template <OrderedField F>
Distribution<F> base_distribution(const FiniteBooleanAlgebra& algebra,
                                  const std::map<std::string, F>& masses) {
  std::vector<F> ordered(algebra.size());
  std::vector<char> seen(algebra.size(), 0);
  for (const auto& [label, mass] : masses) {
    auto a = algebra.find(label);
    if (!a) throw ValidationError("distribution names unknown atom '" + label + "'");
    ordered[a->index] = mass;
    seen[a->index] = 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw ValidationError("distribution has no mass for atom '" + algebra.labels()[i] + "'");
  }
  return base_distribution(algebra, std::move(ordered));
}

std::vector<EpsScalar> tangible_witness(std::size_t n, TangibleWitness kind) {
  if (n == 0) throw ValidationError("witness needs at least one atom");
  std::vector<EpsScalar> r;
  r.reserve(n);
  if (kind == TangibleWitness::uniform) {
    r.assign(n, EpsScalar(Rational(1, static_cast<long>(n))));
    return r;
  }
  // e^i / (e + e^2 + ... + e^n), i = 1..n
  EpsScalar total;
  EpsScalar power = EpsScalar::eps();
  for (std::size_t i = 1; i <= n; ++i) {
    r.push_back(power);
    total += power;
    power *= EpsScalar::eps();
  }
  for (auto& x : r) x /= total;
  return r;
}

template <OrderedField F>
Distribution<EpsScalar> make_tangible(const Distribution<F>& d, TangibleWitness kind) {
  std::vector<EpsScalar> q;
  q.reserve(d.size());
  for (const F& m : d.masses()) q.emplace_back(m);
  if (d.strictly_positive()) return Distribution<EpsScalar>(d.stage(), d.algebra(), std::move(q));
  const EpsScalar e = EpsScalar::eps();
  const EpsScalar keep = EpsScalar(1) - e;
  const std::vector<EpsScalar> r = tangible_witness(d.size(), kind);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = keep * q[i] + e * r[i];
  return Distribution<EpsScalar>(d.stage(), d.algebra(), std::move(q));
}

Distribution<Rational> standard_project(const Distribution<EpsScalar>& d) {
  std::vector<Rational> out;
  out.reserve(d.size());
  for (const EpsScalar& m : d.masses()) out.push_back(m.standard_part());
  return Distribution<Rational>(d.stage(), d.algebra(), std::move(out));
}

template <OrderedField F>
Distribution<F> extend_distribution(const Distribution<F>& d, const ExtensionTower& tower) {
  const std::size_t n = d.stage();
  if (n + 1 >= tower.stage_count()) throw DomainError("no stage after " + std::to_string(n));
  if (tower.stage(n).algebra->id() != d.algebra()) {
    throw AlgebraMismatch("distribution does not live on stage " + std::to_string(n) + " of this tower");
  }
  const Stage& next = tower.stage(n + 1);
  if (next.kind == StageKind::identity) {
    return Distribution<F>(n + 1, next.algebra->id(), d.masses());
  }
  if (!d.strictly_positive()) {
    throw ValidationError("extending a distribution needs strictly positive masses; make it tangible first");
  }
  std::vector<F> block(d.size(), F(0));
  for (const AtomLineage& l : next.lineage) block[l.first] += d.masses()[l.second];
  std::vector<F> out;
  out.reserve(next.size());
  for (const AtomLineage& l : next.lineage) {
    out.push_back(d.masses()[l.first] * d.masses()[l.second] / block[l.first]);
  }
  return Distribution<F>(n + 1, next.algebra->id(), std::move(out));
}

template <OrderedField F>
Distribution<F> extend_to(const Distribution<F>& d, const ExtensionTower& tower, std::size_t stage) {
  if (stage < d.stage()) throw DomainError("cannot extend a distribution backwards");
  Distribution<F> cur = d;
  while (cur.stage() < stage) cur = extend_distribution(cur, tower);
  return cur;
}

template <OrderedField F>
F prob_of(const Distribution<F>& d, const Element& x) {
  if (x.algebra() != d.algebra() || x.universe_size() != d.size()) {
    throw AlgebraMismatch("element and distribution live on different stages");
  }
  std::vector<const F*> terms;
  for (auto i = x.atoms().find_first(); i != AtomSet::npos; i = x.atoms().find_next(i)) {
    terms.push_back(&d.masses()[i]);
  }
  return F::sum(terms);
}

template <OrderedField F>
ConditionalLawReport<F> verify_conditional_law(ExtensionTower& tower, const Distribution<F>& d,
                                               const Element& x, const Element& y) {
  const Element c = tower.conditional(x, y);
  const Distribution<F> dn = extend_to_latest(d, tower);
  const Element xn = tower.forward(x);
  const Element yn = tower.forward(y);
  ConditionalLawReport<F> r;
  r.conditional = c;
  r.p_conditional = prob_of(dn, c);
  r.p_x = prob_of(dn, xn);
  r.p_x_and_y = prob_of(dn, meet(xn, yn));
  r.p_not_x = prob_of(dn, complement(xn));
  r.p_not_x_and_cond = prob_of(dn, meet(complement(xn), c));
  r.product_law = r.p_conditional * r.p_x == r.p_x_and_y;
  r.independence = r.p_conditional * r.p_not_x == r.p_not_x_and_cond;
  return r;
}

template <OrderedField F>
std::vector<Element> lewis_witnesses(const FiniteBooleanAlgebra& algebra,
                                     const std::vector<Distribution<F>>& dists, const Element& x,
                                     const Element& y) {
  algebra.require_owned(x);
  algebra.require_owned(y);
  for (const auto& d : dists) {
    if (d.algebra() != algebra.id()) throw AlgebraMismatch("distribution is not on this algebra");
  }
  std::vector<F> px, pxy;
  for (const auto& d : dists) {
    px.push_back(prob_of(d, x));
    pxy.push_back(prob_of(d, meet(x, y)));
  }
  std::vector<Element> out;
  for (const Element& z : algebra.all_elements()) {
    bool ok = true;
    for (std::size_t k = 0; k < dists.size() && ok; ++k) ok = prob_of(dists[k], z) * px[k] == pxy[k];
    if (ok) out.push_back(z);
  }
  return out;
}

template <OrderedField F>
std::optional<Element> lewis_search(const FiniteBooleanAlgebra& algebra,
                                    const std::vector<Distribution<F>>& dists, const Element& x,
                                    const Element& y) {
  const std::vector<Element> all = lewis_witnesses(algebra, dists, x, y);
  if (all.empty()) return std::nullopt;
  for (const Element& z : all) {
    if (z == y) return z;
  }
  return all.front();
}

#define BAYESEXT_PROB_INSTANTIATE(F)                                                             \
  template class Distribution<F>;                                                                \
  template Distribution<F> base_distribution(const FiniteBooleanAlgebra&,                        \
                                             const std::map<std::string, F>&);                   \
  template Distribution<F> base_distribution(const FiniteBooleanAlgebra&, std::vector<F>);       \
  template Distribution<EpsScalar> make_tangible(const Distribution<F>&, TangibleWitness);       \
  template Distribution<F> extend_distribution(const Distribution<F>&, const ExtensionTower&);   \
  template Distribution<F> extend_to(const Distribution<F>&, const ExtensionTower&, std::size_t); \
  template F prob_of(const Distribution<F>&, const Element&);                                    \
  template ConditionalLawReport<F> verify_conditional_law(ExtensionTower&, const Distribution<F>&, \
                                                          const Element&, const Element&);       \
  template std::vector<Element> lewis_witnesses(const FiniteBooleanAlgebra&,                     \
                                                const std::vector<Distribution<F>>&,             \
                                                const Element&, const Element&);                 \
  template std::optional<Element> lewis_search(const FiniteBooleanAlgebra&,                      \
                                               const std::vector<Distribution<F>>&,              \
                                               const Element&, const Element&);

BAYESEXT_PROB_INSTANTIATE(Rational)
BAYESEXT_PROB_INSTANTIATE(EpsScalar)

}  // namespace bayesext
