#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bayesext/boolalg.hpp"
#include "bayesext/field.hpp"
#include "bayesext/tower.hpp"

namespace bayesext {

/// Exact probability masses on the atoms of one stage.
template <OrderedField F>
class Distribution {
 public:
  Distribution(std::size_t stage, AlgebraId algebra, std::vector<F> masses)
      : stage_(stage), algebra_(algebra), masses_(std::move(masses)) {}

  std::size_t stage() const { return stage_; }
  AlgebraId algebra() const { return algebra_; }
  const std::vector<F>& masses() const { return masses_; }
  const F& mass(AtomId a) const { return masses_.at(a.index); }
  std::size_t size() const { return masses_.size(); }
  bool strictly_positive() const;
  static constexpr FieldTag field_tag() { return field_tag_of<F>(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::size_t stage_;
  AlgebraId algebra_;
  std::vector<F> masses_;
};

/// Validates masses (every label present, all >= 0, sum exactly 1) on a base algebra.
template <OrderedField F>
Distribution<F> base_distribution(const FiniteBooleanAlgebra& algebra,
                                  const std::map<std::string, F>& masses);

/// Same, with masses listed in atom order.
template <OrderedField F>
Distribution<F> base_distribution(const FiniteBooleanAlgebra& algebra, std::vector<F> masses);

enum class TangibleWitness { uniform, hahn };

/// Strictly positive witness R on n atoms: uniform 1/n, or e^i / (e + ... + e^n).
std::vector<EpsScalar> tangible_witness(std::size_t n, TangibleWitness kind);

/// Strictly positive input is lifted unchanged; otherwise Q = (1 - e) P + e R.
/// The standard part of the result is always the input.
template <OrderedField F>
Distribution<EpsScalar> make_tangible(const Distribution<F>& d,
                                      TangibleWitness kind = TangibleWitness::uniform);

/// Atomwise standard part; throws DomainError on an infinite mass.
Distribution<Rational> standard_project(const Distribution<EpsScalar>& d);

/// Carries d from stage n to stage n+1 of the tower. Pair atoms (w, u) get
/// P(w) P(u) / P(block(w)), where block(w) collects every u' with (w, u') surviving.
/// Throws ValidationError unless d is strictly positive.
template <OrderedField F>
Distribution<F> extend_distribution(const Distribution<F>& d, const ExtensionTower& tower);

/// Repeated extend_distribution up to the given (or the latest) stage.
template <OrderedField F>
Distribution<F> extend_to(const Distribution<F>& d, const ExtensionTower& tower, std::size_t stage);

template <OrderedField F>
Distribution<F> extend_to_latest(const Distribution<F>& d, const ExtensionTower& tower) {
  return extend_to(d, tower, tower.latest_index());
}

/// Sum of the masses under x; throws AlgebraMismatch if x is not on d's stage.
template <OrderedField F>
F prob_of(const Distribution<F>& d, const Element& x);

template <OrderedField F>
struct ConditionalLawReport {
  Element conditional;  // [x]y on the latest stage
  F p_conditional;      // P([x]y)
  F p_x;                // P(x)
  F p_x_and_y;          // P(x & y)
  F p_not_x;            // P(~x)
  F p_not_x_and_cond;   // P(~x & [x]y)
  bool product_law = false;   // P([x]y) P(x) = P(x & y)
  bool independence = false;  // P([x]y) P(~x) = P(~x & [x]y)
  bool passed() const { return product_law && independence; }
};

/// Computes [x]y (possibly extending the tower), extends d alongside, and checks both laws exactly.
template <OrderedField F>
ConditionalLawReport<F> verify_conditional_law(ExtensionTower& tower, const Distribution<F>& d,
                                               const Element& x, const Element& y);

/// Elements z of the algebra with P(z) P(x) = P(x & y) under every distribution.
template <OrderedField F>
std::vector<Element> lewis_witnesses(const FiniteBooleanAlgebra& algebra,
                                     const std::vector<Distribution<F>>& dists, const Element& x,
                                     const Element& y);

/// y itself when it is a witness, otherwise the first witness in bitmask order, or none.
template <OrderedField F>
std::optional<Element> lewis_search(const FiniteBooleanAlgebra& algebra,
                                    const std::vector<Distribution<F>>& dists, const Element& x,
                                    const Element& y);

#define BAYESEXT_PROB_EXTERN(F)                                                                  \
  extern template class Distribution<F>;                                                         \
  extern template Distribution<F> base_distribution(const FiniteBooleanAlgebra&,                 \
                                                    const std::map<std::string, F>&);            \
  extern template Distribution<F> base_distribution(const FiniteBooleanAlgebra&, std::vector<F>); \
  extern template Distribution<EpsScalar> make_tangible(const Distribution<F>&, TangibleWitness); \
  extern template Distribution<F> extend_distribution(const Distribution<F>&,                    \
                                                      const ExtensionTower&);                    \
  extern template Distribution<F> extend_to(const Distribution<F>&, const ExtensionTower&,       \
                                            std::size_t);                                        \
  extern template F prob_of(const Distribution<F>&, const Element&);                             \
  extern template ConditionalLawReport<F> verify_conditional_law(                                \
      ExtensionTower&, const Distribution<F>&, const Element&, const Element&);                  \
  extern template std::vector<Element> lewis_witnesses(                                          \
      const FiniteBooleanAlgebra&, const std::vector<Distribution<F>>&, const Element&,          \
      const Element&);                                                                           \
  extern template std::optional<Element> lewis_search(                                           \
      const FiniteBooleanAlgebra&, const std::vector<Distribution<F>>&, const Element&,          \
      const Element&);

BAYESEXT_PROB_EXTERN(Rational)
BAYESEXT_PROB_EXTERN(EpsScalar)
#undef BAYESEXT_PROB_EXTERN

}  // namespace bayesext
