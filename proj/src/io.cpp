#include "bayesext/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "bayesext/error.hpp"
#include "bayesext/scalar_text.hpp"
#include "json.hpp"

namespace bayesext {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

const char* kind_name(StageKind k) {
  switch (k) {
    case StageKind::base: return "base";
    case StageKind::pair: return "pair";
    case StageKind::identity: return "identity";
  }
  return "?";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("cannot write " + path);
}

std::vector<std::string> parse_algebra_json(std::string_view text) {
  json doc = parse_json(text, "algebra file");
  if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
    throw ValidationError("algebra file: expected {\"atoms\": [...]}");
  std::vector<std::string> labels;
  for (const auto& a : doc["atoms"]) {
    if (!a.is_string()) throw ValidationError("algebra file: atom labels must be strings");
    labels.push_back(a.get<std::string>());
  }
  if (labels.empty()) throw ValidationError("algebra file: empty atom list");
  for (const auto& l : labels) validate_base_label(l);
  return labels;
}

std::string tower_to_json(const ExtensionTower& tower) {
  json doc;
  doc["max_atoms"] = tower.options().max_atoms;
  doc["base"] = tower.base_algebra().labels();
  json history = json::array();
  for (const auto& h : tower.history())
    history.push_back({{"stage", h.stage}, {"base", tower.print_literal(h.base)}});
  doc["history"] = history;
  json stages = json::array();
  for (std::size_t i = 0; i < tower.stage_count(); ++i) {
    const Stage& s = tower.stage(i);
    json st;
    st["index"] = i;
    st["kind"] = kind_name(s.kind);
    st["size"] = s.size();
    if (s.conditioned_base) st["conditioned_on"] = tower.print_literal(*s.conditioned_base);
    json atoms = json::array();
    for (const auto& l : s.lineage) {
      if (s.kind == StageKind::identity)
        atoms.push_back({"same", l.first});
      else if (l.is_pair)
        atoms.push_back({"pair", l.first, l.second});
      else
        atoms.push_back({"base", l.base_label});
    }
    st["atoms"] = atoms;
    if (i > 0) st["step_map"] = tower.step_map(i - 1);
    stages.push_back(st);
  }
  doc["stages"] = stages;
  return doc.dump(1) + "\n";
}

ExtensionTower tower_from_json(std::string_view text) {
  json doc = parse_json(text, "tower file");
  try {
    TowerOptions opts;
    opts.max_atoms = doc.at("max_atoms").get<std::size_t>();
    ExtensionTower tower(doc.at("base").get<std::vector<std::string>>(), opts);
    for (const auto& h : doc.at("history")) {
      std::size_t stage = h.at("stage").get<std::size_t>();
      if (stage != tower.latest_index())
        throw ValidationError("tower file: history entry does not extend the latest stage");
      Element b = parse_tower_element(tower, h.at("base").get<std::string>());
      tower.extend(b);
    }
    if (doc.contains("stages")) {
      const auto& stages = doc["stages"];
      if (stages.size() != tower.stage_count())
        throw ValidationError("tower file: stage count does not match the history");
      for (std::size_t i = 0; i < stages.size(); ++i)
        if (stages[i].at("size").get<std::size_t>() != tower.stage(i).size())
          throw ValidationError("tower file: stage " + std::to_string(i) + " size mismatch");
    }
    return tower;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("tower file: ") + e.what());
  }
}

template <OrderedField F>
Distribution<F> parse_distribution_json(const FiniteBooleanAlgebra& algebra, std::string_view text) {
  json doc = parse_json(text, "distribution file");
  if (!doc.is_object() || !doc.contains("masses") || !doc["masses"].is_object())
    throw ValidationError("distribution file: expected {\"masses\": {...}}");
  if (doc.contains("stage") && doc["stage"] != 0)
    throw ValidationError("distribution file: masses must be given on stage 0");
  std::map<std::string, F> masses;
  for (const auto& [label, value] : doc["masses"].items()) {
    if (value.is_string())
      masses.emplace(label, parse_scalar<F>(value.template get<std::string>()));
    else if (value.is_number_integer())
      masses.emplace(label, F(Rational(value.template get<long>())));
    else
      throw ValidationError("distribution file: mass of " + label + " must be a string or integer");
  }
  return base_distribution(algebra, masses);
}

template Distribution<Rational> parse_distribution_json(const FiniteBooleanAlgebra&, std::string_view);
template Distribution<EpsScalar> parse_distribution_json(const FiniteBooleanAlgebra&, std::string_view);

}  // namespace bayesext
