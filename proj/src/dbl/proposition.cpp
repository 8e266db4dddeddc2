#include "bayesext/dbl/proposition.hpp"

#include <algorithm>

#include "bayesext/dbl/parser.hpp"
#include "bayesext/error.hpp"

namespace bayesext::dbl {

struct Proposition::Node {
  Kind kind;
  std::string name;
  std::optional<Proposition> left;
  std::optional<Proposition> right;
  std::size_t size;
};

Proposition Proposition::bot() {
  static const Proposition b(std::make_shared<const Node>(Node{Kind::bot, {}, {}, {}, 1}));
  return b;
}

Proposition Proposition::atom(std::string name) {
  if (name.empty()) throw ValidationError("empty atom name");
  return Proposition(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}, {}, 1}));
}

Proposition Proposition::impl(Proposition a, Proposition b) {
  const std::size_t n = 1 + a.node_count() + b.node_count();
  return Proposition(std::make_shared<const Node>(Node{Kind::impl, {}, std::move(a), std::move(b), n}));
}

Proposition Proposition::cond(Proposition a, Proposition b) {
  const std::size_t n = 1 + a.node_count() + b.node_count();
  return Proposition(std::make_shared<const Node>(Node{Kind::cond, {}, std::move(a), std::move(b), n}));
}

Proposition Proposition::neg(Proposition a) { return impl(std::move(a), bot()); }
Proposition Proposition::top() { return neg(bot()); }
Proposition Proposition::disj(Proposition a, Proposition b) { return impl(neg(std::move(a)), std::move(b)); }
Proposition Proposition::conj(Proposition a, Proposition b) {
  return neg(disj(neg(std::move(a)), neg(std::move(b))));
}
Proposition Proposition::iff(Proposition a, Proposition b) {
  return conj(impl(a, b), impl(b, a));
}

Kind Proposition::kind() const { return node_->kind; }
const std::string& Proposition::name() const { return node_->name; }
const Proposition& Proposition::left() const { return *node_->left; }
const Proposition& Proposition::right() const { return *node_->right; }
std::size_t Proposition::node_count() const { return node_->size; }

bool Proposition::is_element_literal() const {
  return is_atom() && (name().front() == '{' || name().front() == '@');
}

std::optional<Proposition> Proposition::as_neg() const {
  if (is_impl() && right().is_bot()) return left();
  return std::nullopt;
}

bool Proposition::is_top() const { return is_impl() && left().is_bot() && right().is_bot(); }

std::optional<std::pair<Proposition, Proposition>> Proposition::as_disj() const {
  if (!is_impl()) return std::nullopt;
  auto a = left().as_neg();
  if (!a) return std::nullopt;
  return std::make_pair(*a, right());
}

std::optional<std::pair<Proposition, Proposition>> Proposition::as_conj() const {
  auto inner = as_neg();
  if (!inner) return std::nullopt;
  auto d = inner->as_disj();
  if (!d) return std::nullopt;
  auto a = d->first.as_neg();
  auto b = d->second.as_neg();
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

std::optional<std::pair<Proposition, Proposition>> Proposition::as_iff() const {
  auto c = as_conj();
  if (!c || !c->first.is_impl() || !c->second.is_impl()) return std::nullopt;
  const Proposition& f = c->first;
  const Proposition& s = c->second;
  if (f.left() == s.right() && f.right() == s.left()) return std::make_pair(f.left(), f.right());
  return std::nullopt;
}

namespace {

void collect_atoms(const Proposition& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Kind::bot:
      return;
    case Kind::atom:
      if (!p.is_element_literal()) out.insert(p.name());
      return;
    case Kind::impl:
    case Kind::cond:
      collect_atoms(p.left(), out);
      collect_atoms(p.right(), out);
      return;
  }
}

}  // namespace

std::set<std::string> Proposition::atom_names() const {
  std::set<std::string> out;
  collect_atoms(*this, out);
  return out;
}

int Proposition::compare(const Proposition& a, const Proposition& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::bot:
      return 0;
    case Kind::atom:
      return a.name() < b.name() ? -1 : (a.name() == b.name() ? 0 : 1);
    case Kind::impl:
    case Kind::cond: {
      if (a.node_count() != b.node_count()) return a.node_count() < b.node_count() ? -1 : 1;
      const int c = compare(a.left(), b.left());
      return c != 0 ? c : compare(a.right(), b.right());
    }
  }
  return 0;
}

std::string Proposition::to_string() const { return print_prop(*this); }

std::string to_string(const Sequent& s) { return print_sequent(s); }

bool same_multiset(Sequent a, Sequent b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace bayesext::dbl
