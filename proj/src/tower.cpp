#include "bayesext/tower.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "bayesext/error.hpp"

namespace bayesext {

void validate_base_label(const std::string& label) {
  if (label.empty()) throw ValidationError("empty atom label");
  for (char c : label) {
    if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || c == '#' || c == '@' ||
        c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c))) {
      throw ValidationError("atom label '" + label + "' contains a reserved character");
    }
  }
}

Element parse_tower_element(const ExtensionTower& tower, std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  text.remove_prefix(i);
  if (!text.empty() && text.front() == '@') {
    const std::size_t brace = text.find('{');
    if (brace == std::string_view::npos || brace == 1) throw ParseError("expected '@<stage>{...}'", 0);
    const std::string digits(text.substr(1, brace - 1));
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("stage prefix must be a number", 1);
    }
    const std::size_t k = std::stoul(digits);
    if (k >= tower.stage_count()) throw ValidationError("no stage " + digits + " in the tower");
    return tower.algebra(k).parse_element(text.substr(brace));
  }
  const std::vector<std::string> labels = split_element_literal(text);
  for (std::size_t k = tower.stage_count(); k-- > 0;) {
    const FiniteBooleanAlgebra& alg = tower.algebra(k);
    const bool all = std::all_of(labels.begin(), labels.end(), [&](const std::string& l) {
      return alg.find(l).has_value() || (l.size() > 1 && l.front() == '#');
    });
    if (all) return alg.parse_element(text);
  }
  throw ValidationError("no stage of the tower has all the labels of " + std::string(text));
}

Element Stage::transpose(const Element& x) const {
  if (transposition.empty()) return x;
  AtomSet out(x.universe_size());
  for (auto i = x.atoms().find_first(); i != AtomSet::npos; i = x.atoms().find_next(i)) {
    out.set(transposition[i]);
  }
  return Element(x.algebra(), std::move(out));
}

ExtensionTower::ExtensionTower(std::vector<std::string> base_labels, TowerOptions options)
    : ExtensionTower(std::make_shared<const FiniteBooleanAlgebra>(std::move(base_labels)), options) {}

ExtensionTower::ExtensionTower(std::shared_ptr<const FiniteBooleanAlgebra> base, TowerOptions options)
    : options_(options) {
  for (const auto& label : base->labels()) validate_base_label(label);
  Stage s;
  s.index = 0;
  s.kind = StageKind::base;
  s.algebra = std::move(base);
  for (const auto& label : s.algebra->labels()) s.lineage.push_back({false, label, 0, 0});
  stage_by_algebra_[s.algebra->id()] = 0;
  std::vector<std::size_t> ident(s.size());
  for (std::size_t a = 0; a < ident.size(); ++a) ident[a] = a;
  ancestry_.push_back(std::move(ident));
  stages_.push_back(std::move(s));
}

std::optional<std::size_t> ExtensionTower::stage_of(const Element& x) const {
  auto it = stage_by_algebra_.find(x.algebra());
  if (it == stage_by_algebra_.end()) return std::nullopt;
  if (stages_[it->second].size() != x.universe_size()) return std::nullopt;
  return it->second;
}

std::size_t ExtensionTower::require_stage_of(const Element& x) const {
  auto s = stage_of(x);
  if (!s) throw StaleElement("element does not belong to any stage of this tower");
  return *s;
}

Element ExtensionTower::psi(std::size_t i, std::size_t j, const Element& x) const {
  if (i > j) throw DomainError("psi needs i <= j");
  if (j >= stages_.size()) throw DomainError("psi: no stage " + std::to_string(j));
  stages_[i].algebra->require_owned(x);
  if (i == j) return x;
  if (j == latest_index()) {
    const auto& anc = ancestry_[i];
    AtomSet out(anc.size());
    for (std::size_t a = 0; a < anc.size(); ++a) {
      if (x.atoms().test(anc[a])) out.set(a);
    }
    return Element(stages_[j].algebra->id(), std::move(out));
  }
  AtomSet bits = x.atoms();
  for (std::size_t k = i + 1; k <= j; ++k) {
    const Stage& st = stages_[k];
    AtomSet next(st.size());
    for (std::size_t a = 0; a < st.size(); ++a) {
      if (bits.test(st.parent[a])) next.set(a);
    }
    bits = std::move(next);
  }
  return Element(stages_[j].algebra->id(), std::move(bits));
}

Element ExtensionTower::forward(const Element& x) const {
  return psi(require_stage_of(x), latest_index(), x);
}

std::optional<Element> ExtensionTower::preimage(std::size_t s, const Element& x) const {
  latest().algebra->require_owned(x);
  const auto& anc = ancestry_.at(s);
  const std::size_t m = stages_[s].size();
  AtomSet out(m);
  std::vector<char> seen(m, 0);
  for (std::size_t a = 0; a < anc.size(); ++a) {
    const bool bit = x.atoms().test(a);
    const std::size_t p = anc[a];
    if (!seen[p]) {
      seen[p] = 1;
      out[p] = bit;
    } else if (out.test(p) != bit) {
      return std::nullopt;
    }
  }
  return Element(stages_[s].algebra->id(), std::move(out));
}

std::vector<std::vector<std::size_t>> ExtensionTower::step_map(std::size_t n) const {
  if (n + 1 >= stages_.size()) throw DomainError("no step leaves stage " + std::to_string(n));
  std::vector<std::vector<std::size_t>> out(stages_[n].size());
  const Stage& next = stages_[n + 1];
  for (std::size_t a = 0; a < next.size(); ++a) out[next.parent[a]].push_back(a);
  return out;
}

std::optional<DomainEntry> ExtensionTower::domain_lookup(const Element& x) const {
  latest().algebra->require_owned(x);
  for (auto it = base_images_.rbegin(); it != base_images_.rend(); ++it) {
    const Element& img = it->second;
    const std::size_t ci = img.count();
    const std::size_t cx = x.count();
    const bool same = ci == cx && img == x;
    const bool opposite = !same && ci + cx == x.universe_size() && !img.atoms().intersects(x.atoms());
    if (!same && !opposite) continue;
    const std::size_t s = history_[it->first].stage + 1;
    const Element& b = *stages_[s].base_image;
    return DomainEntry{it->first, s, same ? b : complement(b)};
  }
  return std::nullopt;
}

std::vector<Element> ExtensionTower::conditioning_domain() const {
  std::vector<Element> out{latest().algebra->bottom(), latest().algebra->top()};
  for (const auto& [step, img] : base_images_) {
    for (const Element& e : {img, complement(img)}) {
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  }
  return out;
}

bool ExtensionTower::exclusion_test(AtomId w, AtomId u, const Element& b_in) const {
  const Element b = forward(b_in);
  const std::size_t n = latest().size();
  if (w.index >= n || u.index >= n) throw ValidationError("exclusion_test: atom index out of range");
  const bool w_in = b.contains(w);
  const bool u_in = b.contains(u);
  if (w_in == u_in) throw ValidationError("exclusion_test: atoms are not on opposite sides of the base");
  // Orient so that w lies under `side`.
  const Element side = w_in ? b : complement(b);
  const auto d = domain_lookup(side);
  if (!d) return false;

  // Smallest elements of the totalized image psi_{s,n}(E_s) containing each atom.
  const std::size_t s = d->stage;
  const Stage& st = stages_[s];
  const FiniteBooleanAlgebra& alg = *st.algebra;
  const Element cw = alg.atom({ancestor(s, w.index)});
  const Element cu = alg.atom({ancestor(s, u.index)});
  const Element side_s = d->base_at_stage;
  const Element other_s = complement(side_s);
  auto phi = [&](const Element& z, const Element& base) {
    const Element part = meet(z, base);
    return join(part, st.transpose(part));
  };
  // w ∩ phi(u, ~side) = empty, and symmetrically u ∩ phi(w, side) = empty.
  const bool first = meet(cw, phi(cu, other_s)).is_bottom();
  const bool second = meet(cu, phi(cw, side_s)).is_bottom();
  if (first != second) throw std::logic_error("exclusion_test: the two emptiness forms disagree");
  return first;
}

void ExtensionTower::push_stage(Stage stage) {
  const std::size_t new_index = stages_.size();
  stage.index = new_index;
  for (auto& anc : ancestry_) {
    std::vector<std::size_t> next(stage.size());
    for (std::size_t a = 0; a < stage.size(); ++a) next[a] = anc[stage.parent[a]];
    anc = std::move(next);
  }
  std::vector<std::size_t> ident(stage.size());
  for (std::size_t a = 0; a < ident.size(); ++a) ident[a] = a;
  ancestry_.push_back(std::move(ident));
  for (auto& entry : base_images_) {
    AtomSet next(stage.size());
    for (std::size_t a = 0; a < stage.size(); ++a) {
      if (entry.second.atoms().test(stage.parent[a])) next.set(a);
    }
    entry.second = Element(stage.algebra->id(), std::move(next));
  }
  stage_by_algebra_[stage.algebra->id()] = new_index;
  stages_.push_back(std::move(stage));
}

const Stage& ExtensionTower::extend(const Element& b_in) {
  const Element b = forward(b_in);
  const Stage& cur = latest();
  const std::size_t n = cur.size();
  const std::size_t cur_index = latest_index();

  if (b.is_trivial()) {
    Stage st;
    st.kind = StageKind::identity;
    st.algebra = std::make_shared<const FiniteBooleanAlgebra>(cur.algebra->labels());
    st.lineage.resize(n);
    st.parent.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      st.lineage[a] = {true, {}, a, a};
      st.parent[a] = a;
    }
    st.conditioned_base = b;
    st.base_image = Element(st.algebra->id(), b.atoms());
    history_.push_back({cur_index, b, true});
    push_stage(std::move(st));
    return latest();
  }

  const auto d = domain_lookup(b);
  const std::vector<std::size_t>* anc = d ? &ancestry_[d->stage] : nullptr;
  const std::vector<std::size_t>* trans = d ? &stages_[d->stage].transposition : nullptr;
  auto survives = [&](std::size_t w, std::size_t u) {
    if (b.atoms().test(w) == b.atoms().test(u)) return false;
    if (!anc) return true;
    return (*anc)[u] == (*trans)[(*anc)[w]];
  };

  std::size_t count = 0;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) count += survives(w, u) ? 1 : 0;
  }
  if (count > options_.max_atoms) throw GrowthLimitExceeded(count, options_.max_atoms);

  Stage st;
  st.kind = StageKind::pair;
  std::vector<std::string> labels;
  labels.reserve(count);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!survives(w, u)) continue;
      index[static_cast<std::uint64_t>(w) * n + u] = labels.size();
      labels.push_back("(" + cur.algebra->labels()[w] + "," + cur.algebra->labels()[u] + ")");
      st.lineage.push_back({true, {}, w, u});
      st.parent.push_back(w);
    }
  }
  st.algebra = std::make_shared<const FiniteBooleanAlgebra>(std::move(labels));
  st.transposition.resize(count);
  AtomSet image(count);
  for (std::size_t a = 0; a < count; ++a) {
    const auto& l = st.lineage[a];
    st.transposition[a] = index.at(static_cast<std::uint64_t>(l.second) * n + l.first);
    if (b.atoms().test(l.first)) image.set(a);
  }
  st.conditioned_base = b;
  st.base_image = Element(st.algebra->id(), std::move(image));
  const std::size_t step = history_.size();
  history_.push_back({cur_index, b, false});
  push_stage(std::move(st));
  base_images_.emplace_back(step, *latest().base_image);
  return latest();
}

Element ExtensionTower::phi_at(const DomainEntry& d, const Element& y_at_stage) const {
  const Element part = meet(y_at_stage, d.base_at_stage);
  return join(part, stages_[d.stage].transpose(part));
}

std::optional<Element> ExtensionTower::conditional_shortcut(const Element& x, const Element& y) const {
  const Element xf = forward(x);
  const Element yf = forward(y);
  if (xf.is_trivial()) return yf;
  const auto d = domain_lookup(xf);
  if (!d) return std::nullopt;
  const auto ys = preimage(d->stage, yf);
  if (!ys) return std::nullopt;
  return psi(d->stage, latest_index(), phi_at(*d, *ys));
}

Element ExtensionTower::conditional(const Element& x, const Element& y) {
  if (auto r = conditional_shortcut(x, y)) return *r;
  const Element xf = forward(x);
  const Element yf = forward(y);
  extend(xf);
  auto r = conditional_shortcut(forward(xf), forward(yf));
  if (!r) throw std::logic_error("conditional: base is not total after extending on it");
  return *r;
}

Element ExtensionTower::conditional_fresh(const Element& x, const Element& y) {
  const Element xf = forward(x);
  const Element yf = forward(y);
  if (xf.is_trivial()) return yf;
  extend(xf);
  const Element xn = forward(xf);
  const Element yn = forward(yf);
  const Element part = meet(yn, xn);
  return join(part, latest().transpose(part));
}

std::string ExtensionTower::print(const Element& x) const {
  return algebra(require_stage_of(x)).print_element(x);
}

std::string ExtensionTower::print_literal(const Element& x) const {
  const std::size_t k = require_stage_of(x);
  const std::string body = algebra(k).print_element(x);
  return k == 0 ? body : "@" + std::to_string(k) + body;
}

}  // namespace bayesext
