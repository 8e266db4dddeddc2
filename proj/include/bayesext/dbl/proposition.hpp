#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bayesext::dbl {

enum class Kind { bot, atom, impl, cond };

/// Immutable proposition tree over the four core constructors. Sugar (~, |, &, T, <->)
/// expands on construction and is recognised again when printing.
class Proposition {
 public:
  static Proposition bot();
  static Proposition atom(std::string name);
  static Proposition impl(Proposition a, Proposition b);
  /// [a]b
  static Proposition cond(Proposition a, Proposition b);

  static Proposition neg(Proposition a);                  // a -> F
  static Proposition top();                               // ~F
  static Proposition disj(Proposition a, Proposition b);  // ~a -> b
  static Proposition conj(Proposition a, Proposition b);  // ~(~a | ~b)
  static Proposition iff(Proposition a, Proposition b);   // (a -> b) & (b -> a)

  Kind kind() const;
  /// Atom name; element literals keep their braces, e.g. "{a,c}".
  const std::string& name() const;
  const Proposition& left() const;
  const Proposition& right() const;

  bool is_bot() const { return kind() == Kind::bot; }
  bool is_atom() const { return kind() == Kind::atom; }
  bool is_impl() const { return kind() == Kind::impl; }
  bool is_cond() const { return kind() == Kind::cond; }
  bool is_element_literal() const;

  std::optional<Proposition> as_neg() const;
  bool is_top() const;
  std::optional<std::pair<Proposition, Proposition>> as_disj() const;
  std::optional<std::pair<Proposition, Proposition>> as_conj() const;
  std::optional<std::pair<Proposition, Proposition>> as_iff() const;

  /// Names of the atoms occurring in the proposition (element literals excluded).
  std::set<std::string> atom_names() const;
  std::size_t node_count() const;

  /// Total structural order.
  static int compare(const Proposition& a, const Proposition& b);
  friend bool operator==(const Proposition& a, const Proposition& b) { return compare(a, b) == 0; }
  friend bool operator<(const Proposition& a, const Proposition& b) { return compare(a, b) < 0; }

  std::string to_string() const;

 private:
  struct Node;
  explicit Proposition(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Meta-disjunction of propositions, written `X1 || X2 || ...`.
using Sequent = std::vector<Proposition>;

std::string to_string(const Sequent& s);
/// Multiset equality.
bool same_multiset(Sequent a, Sequent b);

}  // namespace bayesext::dbl
