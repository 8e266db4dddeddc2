#include "bayesext/boolalg.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

#include "bayesext/error.hpp"

namespace bayesext {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

void require_same(const Element& x, const Element& y, const char* op) {
  if (x.algebra() != y.algebra() || x.universe_size() != y.universe_size()) {
    throw AlgebraMismatch(std::string(op) + ": operands belong to different algebras");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<AtomId> Element::atom_ids() const {
  std::vector<AtomId> out;
  out.reserve(atoms_.count());
  for (auto i = atoms_.find_first(); i != AtomSet::npos; i = atoms_.find_next(i)) out.push_back({i});
  return out;
}

Element meet(const Element& x, const Element& y) {
  require_same(x, y, "meet");
  return Element(x.algebra(), x.atoms() & y.atoms());
}

Element join(const Element& x, const Element& y) {
  require_same(x, y, "join");
  return Element(x.algebra(), x.atoms() | y.atoms());
}

Element complement(const Element& x) { return Element(x.algebra(), ~x.atoms()); }

bool leq(const Element& x, const Element& y) {
  require_same(x, y, "leq");
  return x.atoms().is_subset_of(y.atoms());
}

FiniteBooleanAlgebra::FiniteBooleanAlgebra(std::vector<std::string> labels)
    : labels_(std::move(labels)), id_{next_algebra_id.fetch_add(1)} {
  if (labels_.empty()) throw ValidationError("an algebra needs at least one atom");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ValidationError("empty atom label");
    if (!index_.emplace(labels_[i], i).second) {
      throw ValidationError("duplicate atom label '" + labels_[i] + "'");
    }
  }
}

std::optional<AtomId> FiniteBooleanAlgebra::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return AtomId{it->second};
}

Element FiniteBooleanAlgebra::bottom() const { return Element(id_, AtomSet(size())); }

Element FiniteBooleanAlgebra::top() const {
  AtomSet bits(size());
  bits.set();
  return Element(id_, std::move(bits));
}

Element FiniteBooleanAlgebra::atom(AtomId a) const {
  if (a.index >= size()) throw ValidationError("atom index out of range");
  AtomSet bits(size());
  bits.set(a.index);
  return Element(id_, std::move(bits));
}

Element FiniteBooleanAlgebra::from_atoms(const std::vector<AtomId>& atoms) const {
  AtomSet bits(size());
  for (AtomId a : atoms) {
    if (a.index >= size()) throw ValidationError("atom index out of range");
    bits.set(a.index);
  }
  return Element(id_, std::move(bits));
}

Element FiniteBooleanAlgebra::from_bits(AtomSet bits) const {
  if (bits.size() != size()) throw ValidationError("bit set size does not match the algebra");
  return Element(id_, std::move(bits));
}

Element FiniteBooleanAlgebra::from_mask(std::uint64_t mask) const {
  if (size() > 64) throw ValidationError("from_mask needs at most 64 atoms");
  return Element(id_, AtomSet(size(), mask));
}

void FiniteBooleanAlgebra::require_owned(const Element& x) const {
  if (!owns(x)) throw AlgebraMismatch("element does not belong to this algebra");
}

std::vector<Element> FiniteBooleanAlgebra::all_elements() const {
  if (size() > 24) throw ValidationError("too many atoms to enumerate all elements");
  std::vector<Element> out;
  const std::uint64_t n = std::uint64_t{1} << size();
  out.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) out.push_back(from_mask(m));
  return out;
}

std::vector<std::string> split_element_literal(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw ParseError("element literal must be enclosed in braces", 0);
  }
  std::vector<std::string> out;
  const std::string_view body = s.substr(1, s.size() - 2);
  if (trim(body).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    const char c = i < body.size() ? body[i] : ',';
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw ParseError("unbalanced ')' in element literal", i + 1);
    if (c == '{' || c == '}') throw ParseError("unexpected brace in element literal", i + 1);
    if (c == ',' && depth == 0) {
      const std::string_view label = trim(body.substr(start, i - start));
      if (label.empty()) throw ParseError("empty label in element literal", i + 1);
      out.emplace_back(label);
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in element literal", s.size());
  return out;
}

Element FiniteBooleanAlgebra::parse_element(std::string_view text) const {
  AtomSet bits(size());
  for (const std::string& label : split_element_literal(text)) {
    if (label.size() > 1 && label.front() == '#' &&
        std::all_of(label.begin() + 1, label.end(), [](unsigned char c) { return std::isdigit(c); })) {
      const std::size_t i = std::stoul(label.substr(1));
      if (i >= size()) throw ValidationError("atom index " + label + " out of range");
      bits.set(i);
      continue;
    }
    auto a = find(label);
    if (!a) throw ValidationError("unknown atom label '" + label + "'");
    bits.set(a->index);
  }
  return Element(id_, std::move(bits));
}

std::string FiniteBooleanAlgebra::print_element(const Element& x) const {
  require_owned(x);
  std::vector<const std::string*> names;
  for (AtomId a : x.atom_ids()) names.push_back(&labels_[a.index]);
  std::sort(names.begin(), names.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += *names[i];
  }
  return out + "}";
}

std::vector<Element> crop(const std::vector<Element>& family, const Element& x) {
  std::vector<Element> out;
  for (const Element& y : family) {
    if (leq(y, x)) out.push_back(y);
  }
  return out;
}

}  // namespace bayesext
