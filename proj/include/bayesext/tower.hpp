#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bayesext/boolalg.hpp"

namespace bayesext {

enum class StageKind { base, pair, identity };

/// Where an atom comes from: a base label, or a pair of atoms of the previous stage.
struct AtomLineage {
  bool is_pair = false;
  std::string base_label;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct Stage {
  std::size_t index = 0;
  StageKind kind = StageKind::base;
  std::shared_ptr<const FiniteBooleanAlgebra> algebra;
  std::vector<AtomLineage> lineage;
  /// Atom of the previous stage that this atom descends from (its first component).
  std::vector<std::size_t> parent;
  /// Pair stages: index of the transposed pair. Other stages: empty.
  std::vector<std::size_t> transposition;
  /// Element of the previous stage that produced this stage (absent for stage 0).
  std::optional<Element> conditioned_base;
  /// Image of conditioned_base at this stage.
  std::optional<Element> base_image;

  std::size_t size() const { return algebra->size(); }
  Element transpose(const Element& x) const;
};

struct HistoryEntry {
  std::size_t stage;  // index of the stage that was extended
  Element base;       // element of that stage
  bool trivial;       // base was bottom or top
};

/// The stage at which phi(., b) became total for a base b (or its complement).
struct DomainEntry {
  std::size_t step;          // history index that conditioned it
  std::size_t stage;         // stage created by that step
  Element base_at_stage;     // preimage of b at `stage`
};

struct TowerOptions {
  std::size_t max_atoms = 4096;
};

/// Append-only chain of stages E_0 -> E_1 -> ... linked by injective Boolean morphisms psi.
/// Copying a tower forks it; both copies keep accepting elements of the shared prefix.
class ExtensionTower {
 public:
  explicit ExtensionTower(std::vector<std::string> base_labels, TowerOptions options = {});
  explicit ExtensionTower(std::shared_ptr<const FiniteBooleanAlgebra> base, TowerOptions options = {});

  const TowerOptions& options() const { return options_; }
  void set_max_atoms(std::size_t n) { options_.max_atoms = n; }

  std::size_t stage_count() const { return stages_.size(); }
  std::size_t latest_index() const { return stages_.size() - 1; }
  const Stage& stage(std::size_t i) const { return stages_.at(i); }
  const Stage& latest() const { return stages_.back(); }
  const FiniteBooleanAlgebra& algebra(std::size_t i) const { return *stages_.at(i).algebra; }
  const FiniteBooleanAlgebra& base_algebra() const { return *stages_.front().algebra; }
  const std::vector<HistoryEntry>& history() const { return history_; }

  /// Stage owning x, or nullopt if x belongs to no stage of this tower.
  std::optional<std::size_t> stage_of(const Element& x) const;
  /// Throws StaleElement if x belongs to no stage of this tower.
  std::size_t require_stage_of(const Element& x) const;

  /// psi_{i,j}(x); throws DomainError if i > j.
  Element psi(std::size_t i, std::size_t j, const Element& x) const;
  /// Maps x from its own stage to the latest stage.
  Element forward(const Element& x) const;
  /// Ancestor at stage s of atom a of the latest stage.
  std::size_t ancestor(std::size_t s, std::size_t a) const { return ancestry_.at(s).at(a); }
  /// Preimage of a latest-stage element under psi_{s,latest}, if it lies in the image.
  std::optional<Element> preimage(std::size_t s, const Element& x) const;

  /// For stage n, the stage-(n+1) atoms whose first component is atom a.
  std::vector<std::vector<std::size_t>> step_map(std::size_t n) const;

  /// Appends a stage conditioned on b (an element of the latest stage, or forwardable to it).
  const Stage& extend(const Element& b);

  /// Lookup of the stage where phi(., x) became total, for x at the latest stage.
  std::optional<DomainEntry> domain_lookup(const Element& x) const;
  /// Latest-stage elements b for which phi(., b) is total somewhere: bottom, top,
  /// images of past conditioning bases and their complements.
  std::vector<Element> conditioning_domain() const;

  /// Whether the pair (w, u) would be removed when extending the latest stage on b.
  /// w and u are latest-stage atoms on opposite sides of b.
  bool exclusion_test(AtomId w, AtomId u, const Element& b) const;

  /// [x]y. May extend the tower. The result belongs to the (possibly new) latest stage.
  Element conditional(const Element& x, const Element& y);
  /// [x]y through already-built stages only, mapped to the latest stage.
  std::optional<Element> conditional_shortcut(const Element& x, const Element& y) const;
  /// [x]y by always extending on x (no shortcut).
  Element conditional_fresh(const Element& x, const Element& y);

  /// `{...}` with the atom labels of x's own stage.
  std::string print(const Element& x) const;
  /// Like print, prefixed by `@k` when x lives on stage k > 0, so parse_tower_element
  /// reads it back exactly.
  std::string print_literal(const Element& x) const;

 private:
  Element phi_at(const DomainEntry& d, const Element& y_at_stage) const;
  void push_stage(Stage stage);

  TowerOptions options_;
  std::vector<Stage> stages_;
  std::vector<HistoryEntry> history_;
  /// For each nontrivial history step: image at the latest stage of the base it conditioned.
  std::vector<std::pair<std::size_t, Element>> base_images_;
  /// ancestry_[s][a]: ancestor at stage s of latest-stage atom a.
  std::vector<std::vector<std::size_t>> ancestry_;
  std::map<AlgebraId, std::size_t> stage_by_algebra_;
};

/// Resolves an element literal against a tower. `@k{...}` names stage k explicitly;
/// a bare `{...}` resolves against the latest stage whose labels include all listed ones.
Element parse_tower_element(const ExtensionTower& tower, std::string_view text);

/// Rejects labels that would clash with the element literal syntax.
void validate_base_label(const std::string& label);

}  // namespace bayesext
