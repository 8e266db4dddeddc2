#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bayesext {

struct AlgebraId {
  std::uint64_t value = 0;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Index of an atom; only meaningful inside the algebra that issued it.
struct AtomId {
  std::size_t index = 0;
  friend auto operator<=>(const AtomId&, const AtomId&) = default;
};

using AtomSet = boost::dynamic_bitset<std::uint64_t>;

/// Element of a finite Boolean algebra, stored as the set of atoms below it.
class Element {
 public:
  Element() = default;
  Element(AlgebraId algebra, AtomSet atoms) : algebra_(algebra), atoms_(std::move(atoms)) {}

  AlgebraId algebra() const { return algebra_; }
  const AtomSet& atoms() const { return atoms_; }
  std::size_t universe_size() const { return atoms_.size(); }
  std::size_t count() const { return atoms_.count(); }
  bool contains(AtomId a) const { return atoms_.test(a.index); }
  bool is_bottom() const { return atoms_.none(); }
  bool is_top() const { return atoms_.all(); }
  bool is_trivial() const { return is_bottom() || is_top(); }
  std::vector<AtomId> atom_ids() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.atoms_ == b.atoms_;
  }
  /// Canonical order inside one algebra (by bit pattern); used for containers only.
  friend bool operator<(const Element& a, const Element& b) {
    if (a.algebra_ != b.algebra_) return a.algebra_ < b.algebra_;
    return a.atoms_ < b.atoms_;
  }

 private:
  AlgebraId algebra_;
  AtomSet atoms_;
};

/// All operations throw AlgebraMismatch when the operands come from different algebras.
Element meet(const Element& x, const Element& y);
Element join(const Element& x, const Element& y);
Element complement(const Element& x);
bool leq(const Element& x, const Element& y);
inline Element operator&(const Element& x, const Element& y) { return meet(x, y); }
inline Element operator|(const Element& x, const Element& y) { return join(x, y); }
inline Element operator~(const Element& x) { return complement(x); }

/// Finite Boolean algebra given by its generating partition (the atoms).
class FiniteBooleanAlgebra {
 public:
  /// Throws ValidationError on an empty or duplicated label list.
  explicit FiniteBooleanAlgebra(std::vector<std::string> labels);

  AlgebraId id() const { return id_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(AtomId a) const { return labels_.at(a.index); }
  std::optional<AtomId> find(std::string_view label) const;

  Element bottom() const;
  Element top() const;
  Element atom(AtomId a) const;
  Element from_atoms(const std::vector<AtomId>& atoms) const;
  Element from_bits(AtomSet bits) const;
  /// Element whose atoms are the set bits of `mask` (requires size() <= 64).
  Element from_mask(std::uint64_t mask) const;
  bool owns(const Element& x) const { return x.algebra() == id_ && x.universe_size() == size(); }
  /// Throws AlgebraMismatch unless owns(x).
  void require_owned(const Element& x) const;

  /// Every element, in increasing bitmask order; requires size() <= 24.
  std::vector<Element> all_elements() const;

  /// Accepts `{}`, `{a,c}`, labels containing balanced parentheses such as `{(a,d),c}`,
  /// and `#i` to name the atom with index i.
  Element parse_element(std::string_view text) const;
  /// `{...}` with labels in lexicographic order.
  std::string print_element(const Element& x) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  AlgebraId id_;
};

/// { y in F : y <= x }
std::vector<Element> crop(const std::vector<Element>& family, const Element& x);

/// Splits `{l1,l2,...}` into raw labels, honouring nested parentheses.
std::vector<std::string> split_element_literal(std::string_view text);

}  // namespace bayesext
