#include "bayesext/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "bayesext/axioms.hpp"
#include "bayesext/cantor.hpp"
#include "bayesext/dbl/derivation.hpp"
#include "bayesext/dbl/parser.hpp"
#include "bayesext/dbl/search.hpp"
#include "bayesext/dbl/semantics.hpp"
#include "bayesext/error.hpp"
#include "bayesext/io.hpp"
#include "bayesext/scalar_text.hpp"
#include "json.hpp"

namespace bayesext {

namespace {

using nlohmann::json;

struct Globals {
  std::optional<std::size_t> max_atoms;
  std::string field = "rational";
  std::size_t budget = 4000;
  std::string format = "text";
  bool strict = false;
  bool json() const { return format == "json"; }
};

/// Signals a failed check (exit code 1) after the report has been printed.
struct CheckFailed {};

ExtensionTower load_tower(const std::string& path, const Globals& g) {
  ExtensionTower t = tower_from_json(read_file(path));
  if (g.max_atoms) t.set_max_atoms(*g.max_atoms);
  return t;
}

std::string stage_summary(const ExtensionTower& t) {
  const Stage& s = t.latest();
  std::ostringstream out;
  out << "stage " << t.latest_index() << ": " << s.size() << " atoms";
  if (s.conditioned_base) out << ", conditioned on " << t.print_literal(*s.conditioned_base);
  return out.str();
}

/// Query grammar shared with DBL: element literals combined with ~ & | -> <-> and [x]y.
Element evaluate_query(ExtensionTower& tower, const std::string& text) {
  return dbl::evaluate(tower, {}, dbl::parse_prop(text));
}

bool has_pair_stage(const ExtensionTower& t) {
  for (std::size_t i = 1; i < t.stage_count(); ++i)
    if (t.stage(i).kind == StageKind::pair) return true;
  return false;
}

/// Masses in the requested field. A rational distribution with a zero mass is lifted to the
/// infinitesimal field when `needs_positive` (refused under --strict).
using AnyDistribution = std::variant<Distribution<Rational>, Distribution<EpsScalar>>;

AnyDistribution load_distribution(const Globals& g, const FiniteBooleanAlgebra& base, const std::string& path,
                                  bool needs_positive) {
  const std::string text = read_file(path);
  if (g.field == "eps") {
    Distribution<EpsScalar> d = parse_distribution_json<EpsScalar>(base, text);
    if (!needs_positive || d.strictly_positive()) return d;
    if (g.strict) throw ValidationError("distribution has a zero mass (--strict)");
    return make_tangible(d);
  }
  Distribution<Rational> d = parse_distribution_json<Rational>(base, text);
  if (!needs_positive || d.strictly_positive()) return d;
  if (g.strict) throw ValidationError("distribution has a zero mass (--strict)");
  return make_tangible(d);
}

int cmd_prob(const Globals& g, const std::string& tower_path, const std::string& dist_path,
             const std::string& query, std::ostream& out) {
  ExtensionTower tower = load_tower(tower_path, g);
  const Element x = evaluate_query(tower, query);
  const AnyDistribution any = load_distribution(g, tower.base_algebra(), dist_path, has_pair_stage(tower));
  const std::string p =
      std::visit([&](const auto& d) { return to_text(prob_of(extend_to_latest(d, tower), x)); }, any);
  if (g.json())
    out << json{{"query", query}, {"element", tower.print_literal(x)}, {"probability", p}}.dump() << "\n";
  else
    out << p << "\n";
  return 0;
}

template <OrderedField F>
int verify_with(const Globals& g, ExtensionTower& tower, const Distribution<F>& d,
                std::optional<bool> projection_ok, std::ostream& out) {
  const FiniteBooleanAlgebra& base = tower.base_algebra();
  AxiomReport axioms = check_bayes_axioms(tower);
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::optional<std::string> first;
  const std::vector<Element> elements = base.all_elements();
  for (const Element& x : elements) {
    if (x.is_bottom()) continue;
    ExtensionTower fork = tower;
    for (const Element& y : elements) {
      ConditionalLawReport<F> r = verify_conditional_law(fork, d, x, y);
      ++pairs;
      if (!r.passed()) {
        ++failures;
        if (!first) first = "[" + base.print_element(x) + "]" + base.print_element(y);
      }
    }
  }
  const bool ok = axioms.passed() && failures == 0 && projection_ok.value_or(true);
  if (g.json()) {
    json laws = json::array();
    for (const auto& l : axioms.laws)
      laws.push_back({{"law", l.law}, {"checked", l.checked}, {"failures", l.failures}});
    json doc{{"atoms", axioms.atoms},     {"exhaustive", axioms.exhaustive}, {"laws", laws},
             {"conditional_pairs", pairs}, {"conditional_failures", failures}, {"passed", ok}};
    if (projection_ok) doc["standard_part_matches"] = *projection_ok;
    out << doc.dump() << "\n";
  } else {
    out << axioms.to_string();
    out << "conditional law: " << pairs << " pairs, " << failures << " failures";
    if (first) out << " e.g. " << *first;
    out << "\n";
    if (projection_ok)
      out << "standard part of the tangible distribution: " << (*projection_ok ? "matches" : "DIFFERS") << "\n";
    out << (ok ? "verify: pass" : "verify: FAIL") << "\n";
  }
  if (!ok) throw CheckFailed{};
  return 0;
}

int cmd_verify(const Globals& g, const std::string& tower_path, const std::string& dist_path, std::ostream& out) {
  ExtensionTower tower = load_tower(tower_path, g);
  const FiniteBooleanAlgebra& base = tower.base_algebra();
  if (base.size() > 8) throw ValidationError("verify enumerates base elements; at most 8 base atoms");
  const AnyDistribution input = load_distribution(g, base, dist_path, false);
  const AnyDistribution d = load_distribution(g, base, dist_path, true);
  if (const auto* eps = std::get_if<Distribution<EpsScalar>>(&d)) {
    // Projection back to the input's standard part.
    const Distribution<Rational> projected = standard_project(*eps);
    const bool same = std::visit(
        [&](const auto& in) {
          for (std::size_t a = 0; a < in.size(); ++a)
            if (EpsScalar(projected.masses()[a]) != EpsScalar(in.masses()[a])) return false;
          return true;
        },
        input);
    return verify_with(g, tower, *eps, same, out);
  }
  return verify_with(g, tower, std::get<Distribution<Rational>>(d), std::nullopt, out);
}

int cmd_lewis(const Globals& g, const std::string& algebra_path, const std::string& x_text,
              const std::string& y_text, const std::vector<std::string>& dist_paths, std::ostream& out) {
  auto alg = std::make_shared<const FiniteBooleanAlgebra>(parse_algebra_json(read_file(algebra_path)));
  const Element x = alg->parse_element(x_text);
  const Element y = alg->parse_element(y_text);
  std::vector<AnyDistribution> inputs;
  for (const auto& p : dist_paths) inputs.push_back(load_distribution(g, *alg, p, false));
  std::vector<std::string> witness_text;
  if (std::holds_alternative<Distribution<Rational>>(inputs.front())) {
    std::vector<Distribution<Rational>> dists;
    for (const auto& d : inputs) dists.push_back(std::get<Distribution<Rational>>(d));
    for (const Element& e : lewis_witnesses(*alg, dists, x, y)) witness_text.push_back(alg->print_element(e));
  } else {
    std::vector<Distribution<EpsScalar>> dists;
    for (const auto& d : inputs) dists.push_back(std::get<Distribution<EpsScalar>>(d));
    for (const Element& e : lewis_witnesses(*alg, dists, x, y)) witness_text.push_back(alg->print_element(e));
  }

  TowerOptions opts;
  if (g.max_atoms) opts.max_atoms = *g.max_atoms;
  const ExtensionTower tower(alg, opts);
  bool ok = true;
  std::vector<std::string> lines;
  std::string conditional;
  for (std::size_t i = 0; i < dist_paths.size(); ++i) {
    ExtensionTower fork = tower;
    const AnyDistribution d = load_distribution(g, *alg, dist_paths[i], true);
    std::visit(
        [&](const auto& dist) {
          const auto r = verify_conditional_law(fork, dist, x, y);
          ok = ok && r.passed();
          conditional = fork.print_literal(r.conditional);
          lines.push_back("distribution " + std::to_string(i + 1) + ": P([x]y) = " + to_text(r.p_conditional) +
                          ", P(x & y) = " + to_text(r.p_x_and_y) + ", P(x) = " + to_text(r.p_x) + ": " +
                          (r.passed() ? "ok" : "FAIL"));
        },
        d);
  }
  if (g.json()) {
    out << json{{"internal_witnesses", witness_text}, {"conditional", conditional}, {"extension_laws", ok}}.dump()
        << "\n";
  } else {
    out << "internal witnesses:";
    if (witness_text.empty()) out << " none";
    for (const auto& w : witness_text) out << " " << w;
    out << "\n[x]y in the extension: " << conditional << "\n";
    for (const auto& l : lines) out << l << "\n";
  }
  if (!ok) throw CheckFailed{};
  return 0;
}

/// Sequents given inline or, when the argument names a file, one per line (# comments).
std::vector<dbl::Sequent> read_sequents(const std::string& arg) {
  std::vector<dbl::Sequent> out;
  if (std::filesystem::is_regular_file(arg)) {
    std::istringstream in(read_file(arg));
    std::string line;
    while (std::getline(in, line)) {
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      out.push_back(dbl::parse_sequent(line));
    }
  } else {
    out.push_back(dbl::parse_sequent(arg));
  }
  return out;
}

int cmd_dbl_eval(const Globals& g, const std::string& tower_path, const std::string& sequent,
                 const std::vector<std::string>& bindings, std::ostream& out) {
  ExtensionTower tower = load_tower(tower_path, g);
  dbl::Valuation v;
  for (const auto& b : bindings) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) throw ValidationError("binding must look like NAME=ELEMENT: " + b);
    v.insert_or_assign(b.substr(0, eq), parse_tower_element(tower, b.substr(eq + 1)));
  }
  const dbl::Sequent s = dbl::parse_sequent(sequent);
  const std::vector<Element> values = dbl::evaluate_sequent(tower, v, s);
  bool holds = false;
  for (const Element& e : values) holds = holds || e.is_top();
  if (g.json()) {
    json members = json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
      members.push_back({{"member", dbl::print_prop(s[i])}, {"value", tower.print_literal(values[i])}});
    out << json{{"members", members}, {"holds", holds}}.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < s.size(); ++i)
      out << dbl::print_prop(s[i]) << " = " << tower.print_literal(values[i]) << "\n";
    out << (holds ? "holds" : "does not hold") << "\n";
  }
  return 0;
}

int cmd_dbl_search(const Globals& g, const std::vector<std::string>& inputs, std::ostream& out) {
  dbl::SearchBudget budget;
  budget.valuations = g.budget;
  if (g.max_atoms) budget.max_atoms = *g.max_atoms;
  bool found = false;
  json results = json::array();
  for (const auto& input : inputs) {
    for (const dbl::Sequent& s : read_sequents(input)) {
      const dbl::SearchResult r = dbl::search_counterexample(s, budget);
      found = found || r.counterexample.has_value();
      if (g.json()) {
        json item{{"sequent", dbl::print_sequent(s)}, {"tried", r.tried}, {"skipped", r.skipped}};
        if (r.counterexample) item["counterexample"] = r.counterexample->describe(s);
        results.push_back(item);
      } else if (r.counterexample) {
        out << dbl::print_sequent(s) << ": counterexample\n" << r.counterexample->describe(s);
      } else {
        out << dbl::print_sequent(s) << ": no counterexample in " << r.tried << " valuations";
        if (r.skipped) out << " (" << r.skipped << " skipped by the growth guard)";
        out << "\n";
      }
    }
  }
  if (g.json()) out << results.dump(1) << "\n";
  if (found) throw CheckFailed{};
  return 0;
}

int cmd_dbl_check(const Globals& g, const std::vector<std::string>& files, std::optional<std::size_t> soundness,
                  bool verbose, std::ostream& out) {
  bool ok = true;
  json results = json::array();
  for (const auto& f : files) {
    const dbl::Derivation d = dbl::parse_derivation(read_file(f));
    const dbl::DerivationReport r = dbl::check_derivation(d);
    const std::string name = d.name.empty() ? std::filesystem::path(f).stem().string() : d.name;
    ok = ok && r.valid();
    json item{{"name", name}, {"steps", d.steps.size()}, {"valid", r.valid()}};
    std::string text = name + ": " + (r.valid() ? "valid" : "INVALID") + " (" + std::to_string(d.steps.size()) +
                       " steps)";
    if (d.proves) text += ", proves " + dbl::print_sequent(*d.proves);
    text += "\n";
    if (!r.valid() || verbose) text += r.to_string();
    if (soundness && r.valid()) {
      dbl::SoundnessOptions opts;
      opts.valuations = *soundness;
      if (g.max_atoms) opts.max_atoms = *g.max_atoms;
      const dbl::SoundnessReport s = dbl::check_soundness(d, opts);
      ok = ok && s.passed();
      item["soundness_violations"] = s.violations;
      text += "  soundness: " + s.to_string();
    }
    if (g.json())
      results.push_back(item);
    else
      out << text;
  }
  if (g.json()) out << results.dump(1) << "\n";
  if (!ok) throw CheckFailed{};
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bayesian extensions of finite Boolean algebras and Deterministic Bayesian Logic", "bayesext"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--max-atoms", g.max_atoms, "Growth guard on the number of atoms per stage");
  app.add_option("--field", g.field, "Scalar field for masses")->check(CLI::IsMember({"rational", "eps"}));
  app.add_option("--budget", g.budget, "Valuations tried by dbl search");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", g.strict, "Refuse distributions with a zero mass instead of making them tangible");

  std::function<int()> action;

  std::string algebra_path, output, tower_path, element, x_text, y_text, dist_path, query;
  auto* build = app.add_subcommand("build", "Write a stage-0 tower dump for an algebra file");
  build->add_option("algebra", algebra_path, "Algebra JSON {\"atoms\": [...]}")->required();
  build->add_option("-o,--output", output, "Tower dump to write (stdout when omitted)");
  build->callback([&] {
    action = [&] {
      TowerOptions opts;
      if (g.max_atoms) opts.max_atoms = *g.max_atoms;
      ExtensionTower t(parse_algebra_json(read_file(algebra_path)), opts);
      if (output.empty()) {
        out << tower_to_json(t);
      } else {
        write_file(output, tower_to_json(t));
        out << stage_summary(t) << " " << t.base_algebra().print_element(t.base_algebra().top()) << "\n";
      }
      return 0;
    };
  });

  auto* extend = app.add_subcommand("extend", "Extend the latest stage on an element");
  extend->add_option("tower", tower_path, "Tower dump")->required();
  extend->add_option("element", element, "Element literal")->required();
  extend->add_option("-o,--output", output, "Where to write the result (default: in place)");
  extend->callback([&] {
    action = [&] {
      ExtensionTower t = load_tower(tower_path, g);
      t.extend(parse_tower_element(t, element));
      write_file(output.empty() ? tower_path : output, tower_to_json(t));
      out << stage_summary(t) << "\n";
      return 0;
    };
  });

  bool no_save = false;
  auto* cond = app.add_subcommand("cond", "Compute [x]y, extending the tower when needed");
  cond->add_option("tower", tower_path, "Tower dump")->required();
  cond->add_option("x", x_text, "Condition (element literal)")->required();
  cond->add_option("y", y_text, "Conditioned element literal")->required();
  cond->add_flag("--no-save", no_save, "Do not write an extended tower back");
  cond->callback([&] {
    action = [&] {
      ExtensionTower t = load_tower(tower_path, g);
      const std::size_t before = t.stage_count();
      const Element r = t.conditional(parse_tower_element(t, x_text), parse_tower_element(t, y_text));
      if (t.stage_count() != before && !no_save) write_file(tower_path, tower_to_json(t));
      const std::size_t stage = t.require_stage_of(r);
      if (g.json())
        out << json{{"stage", stage}, {"element", t.print(r)}, {"extended", t.stage_count() != before}}.dump()
            << "\n";
      else
        out << "stage " << stage << ": " << t.print(r) << "\n";
      return 0;
    };
  });

  auto* prob = app.add_subcommand("prob", "Probability of an element or conditional such as [{a,c}]{a}");
  prob->add_option("tower", tower_path, "Tower dump")->required();
  prob->add_option("dist", dist_path, "Distribution JSON on the base atoms")->required();
  prob->add_option("query", query, "Element literal or formula over element literals")->required();
  prob->callback([&] {
    action = [&] {
      return cmd_prob(g, tower_path, dist_path, query, out);
    };
  });

  auto* verify = app.add_subcommand("verify", "Check the Bayesian laws and the conditional probability law");
  verify->add_option("tower", tower_path, "Tower dump")->required();
  verify->add_option("dist", dist_path, "Distribution JSON on the base atoms")->required();
  verify->callback([&] {
    action = [&] {
      return cmd_verify(g, tower_path, dist_path, out);
    };
  });

  std::vector<std::string> dist_paths;
  auto* lewis = app.add_subcommand("lewis", "Look for an internal conditional, then build the external one");
  lewis->add_option("algebra", algebra_path, "Algebra JSON")->required();
  lewis->add_option("x", x_text, "Condition")->required();
  lewis->add_option("y", y_text, "Conditioned element")->required();
  lewis->add_option("dists", dist_paths, "Distribution JSON files")->required();
  lewis->callback([&] {
    action = [&] {
      return cmd_lewis(g, algebra_path, x_text, y_text, dist_paths, out);
    };
  });

  auto* dbl_cmd = app.add_subcommand("dbl", "Deterministic Bayesian Logic");
  dbl_cmd->require_subcommand(1);
  std::string sequent;
  std::vector<std::string> bindings, inputs;
  auto* eval = dbl_cmd->add_subcommand("eval", "Evaluate a sequent on a tower");
  eval->add_option("tower", tower_path, "Tower dump")->required();
  eval->add_option("sequent", sequent, "Sequent, members separated by ||")->required();
  eval->add_option("-b,--bind", bindings, "NAME=ELEMENT");
  eval->callback([&] { action = [&] { return cmd_dbl_eval(g, tower_path, sequent, bindings, out); }; });

  auto* search = dbl_cmd->add_subcommand("search", "Look for a counterexample to each sequent");
  search->add_option("inputs", inputs, "Sequents, or files with one sequent per line")->required();
  search->callback([&] { action = [&] { return cmd_dbl_search(g, inputs, out); }; });

  std::optional<std::size_t> soundness;
  bool verbose = false;
  auto* check = dbl_cmd->add_subcommand("check", "Validate derivation files");
  check->add_option("files", inputs, "Derivation JSON files")->required();
  check->add_option("--soundness", soundness, "Also sample this many valuations for soundness");
  check->add_flag("-v,--verbose", verbose, "Print every step");
  check->callback([&] { action = [&] { return cmd_dbl_check(g, inputs, soundness, verbose, out); }; });

  std::vector<std::uint64_t> numbers;
  auto* pairing = app.add_subcommand("pairing", "Cantor pairing: n -> i j, or i j -> n");
  pairing->add_option("numbers", numbers, "n, or i j")->required()->expected(1, 2);
  pairing->callback([&] {
    action = [&] {
      if (numbers.size() == 1) {
        const auto [i, j] = cantor_unpair(numbers[0]);
        if (g.json())
          out << json{{"n", numbers[0]}, {"i", i}, {"j", j}}.dump() << "\n";
        else
          out << i << " " << j << "\n";
      } else {
        const std::uint64_t n = cantor_pair(numbers[0], numbers[1]);
        if (g.json())
          out << json{{"n", n}, {"i", numbers[0]}, {"j", numbers[1]}}.dump() << "\n";
        else
          out << n << "\n";
      }
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const CheckFailed&) {
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bayesext
