#include "bipglue/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bipglue/ai.hpp"
#include "bipglue/behavior.hpp"
#include "bipglue/connector.hpp"
#include "bipglue/dot.hpp"
#include "bipglue/equivalence.hpp"
#include "bipglue/error.hpp"
#include "bipglue/json_io.hpp"
#include "bipglue/rules.hpp"
#include "bipglue/synthesis.hpp"
#include "bipglue/tree.hpp"

namespace bipglue {

namespace {

struct Common {
  std::string lexing = "auto";
  std::size_t max_ports = 12;
  std::vector<std::string> ports;

  PortLexing mode() const {
    if (lexing == "words") return PortLexing::Words;
    if (lexing == "letters") return PortLexing::Letters;
    return PortLexing::Auto;
  }
  RulesOptions rules() const {
    RulesOptions o;
    o.max_ports = max_ports;
    return o;
  }
  OfferOptions offer() const {
    OfferOptions o;
    o.max_ports = std::max<std::size_t>(max_ports, 16);
    return o;
  }
  TreeOfRulesOptions tree_of_rules() const {
    TreeOfRulesOptions o;
    o.rules = rules();
    o.check_max_ports = max_ports;
    return o;
  }
  PortSet extra_ports() const {
    PortSet s;
    for (const auto& p : ports) s.insert(Port(p));
    return s;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--lexing", c.lexing, "Port lexing: auto, words or letters")
      ->check(CLI::IsMember({"auto", "words", "letters"}));
  app->add_option("--max-ports", c.max_ports, "Enumeration cap on the port universe");
  app->add_option("--ports", c.ports, "Extra ports added to the universe")
      ->delimiter(',');
}

// Expressions such as `-p -> q!` look like short options to the parser; they
// are tagged before parsing and untagged here.
constexpr char kTag = '\x01';

bool looks_like_expression(const std::string& a) {
  return a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-v" && a != "-h";
}

std::string untag(const std::string& a) {
  return !a.empty() && a[0] == kTag ? a.substr(1) : a;
}

// `@path` reads a file, `-` reads stdin, anything else is inline text.
std::string input_text(const std::string& tagged) {
  const std::string arg = untag(tagged);
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1), 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::string file_text(const std::string& tagged) {
  const std::string path = untag(tagged);
  return input_text(path == "-" ? path : "@" + path);
}

// A term of one of the textual kinds.
struct Term {
  std::string kind;
  std::optional<AiTerm> ai;
  std::optional<ConnectorTerm> conn;
  std::optional<CausalTree> tree;
  std::optional<CausalRuleSystem> rules;
  std::optional<InteractionSet> set;
};

Term parse_term(const std::string& kind, const std::string& text, const Common& c) {
  Term t;
  t.kind = kind;
  if (kind == "ai") {
    t.ai = parse_ai(text, c.mode());
  } else if (kind == "conn") {
    t.conn = parse_connector(text, c.mode());
  } else if (kind == "tree") {
    t.tree = parse_tree(text, c.mode());
  } else if (kind == "rules") {
    t.rules = parse_rules(text, c.mode());
  } else {
    t.set = parse_interaction_set(text, c.mode());
  }
  return t;
}

InteractionSet semantics(const Term& t, const Common& c) {
  InteractionSet s;
  if (t.ai) s = eval_ai(*t.ai);
  if (t.conn) s = eval_connector(*t.conn);
  if (t.tree) s = eval_tree(*t.tree);
  if (t.rules) s = eval_rules(*t.rules, c.rules());
  if (t.set) s = *t.set;
  return s.widened(c.extra_ports());
}

const std::vector<std::string> kKinds{"ai", "conn", "tree", "rules", "set"};

// --- verbs --------------------------------------------------------------------

struct EvalArgs {
  std::string kind = "tree";
  std::string expr;
};

int do_eval(const EvalArgs& a, const Common& c, std::ostream& out) {
  out << to_string(semantics(parse_term(a.kind, input_text(a.expr), c), c)) << "\n";
  return kExitOk;
}

struct ConvertArgs {
  std::string from = "conn";
  std::string to = "tree";
  bool firing_only = false;
  bool reduce = false;
  std::string expr;
};

int do_convert(const ConvertArgs& a, const Common& c, std::ostream& out) {
  Term t = parse_term(a.from, input_text(a.expr), c);
  if (a.to == "set") {
    out << to_string(semantics(t, c)) << "\n";
    return kExitOk;
  }
  // Route through trees: conn -tau-> tree -R-> rules and back with
  // tree_of_rules and sigma.
  CausalTree tree;
  if (t.tree) {
    tree = *t.tree;
  } else if (t.conn) {
    tree = tau(*t.conn);
  } else if (t.rules) {
    tree = tree_of_rules(*t.rules, c.tree_of_rules());
  } else {
    throw SemanticError("cannot convert from " + a.from);
  }
  if (a.to == "tree") {
    out << to_string(tree) << "\n";
  } else if (a.to == "conn") {
    out << to_string(sigma(tree)) << "\n";
  } else if (a.to == "rules") {
    auto r = rules_of_tree(tree, a.firing_only ? RuleMode::FiringOnly : RuleMode::Full);
    if (a.reduce) r = reduce_rules(r, c.rules());
    out << to_string(r);
  } else {
    throw SemanticError("cannot convert to " + a.to);
  }
  return kExitOk;
}

struct NormalizeArgs {
  std::string kind = "tree";
  bool strict = false;
  std::string expr;
};

int do_normalize(const NormalizeArgs& a, const Common& c, std::ostream& out) {
  const std::string text = input_text(a.expr);
  if (a.kind == "tree") {
    out << to_string(normalize_tree(parse_tree(text, c.mode()), {a.strict})) << "\n";
  } else if (a.kind == "conn") {
    out << to_string(normalize_connector(parse_connector(text, c.mode()))) << "\n";
  } else {
    const auto s = parse_interaction_set(text, c.mode()).widened(c.extra_ports());
    out << to_string(normalize_interaction_set(s)) << "\n";
  }
  return kExitOk;
}

struct EquivArgs {
  std::string mode = "offer";
  std::string kind = "tree";
  std::string kind_b;
  std::string a, b;
};

std::string names(const PortSet& s) {
  std::string out;
  for (const auto& p : s) out += (out.empty() ? "" : " ") + p.name();
  return out.empty() ? "none" : out;
}

std::string labels(const std::set<PortSet>& ls) {
  std::string out;
  for (const auto& l : ls) out += (out.empty() ? "" : ", ") + names(l);
  return "{" + out + "}";
}

int do_equiv(const EquivArgs& a, const Common& c, std::ostream& out) {
  auto x = semantics(parse_term(a.kind, input_text(a.a), c), c);
  auto y = semantics(parse_term(a.kind_b.empty() ? a.kind : a.kind_b, input_text(a.b), c), c);
  const PortSet u = port_union(x.universe(), y.universe());
  x = x.widened(u);
  y = y.widened(u);
  if (a.mode == "strong") {
    const bool eq = equiv_strong(x, y);
    out << (eq ? "equivalent" : "not equivalent") << "\n";
    return eq ? kExitOk : kExitNotEquivalent;
  }
  const auto w = offer_counterexample(x, y, c.offer());
  if (!w) {
    out << "equivalent\n";
    return kExitOk;
  }
  out << "not equivalent\n"
      << "fired: " << names(w->fired) << "\n"
      << "offered: " << names(w->offered) << "\n"
      << "left enables: " << labels(w->left) << "\n"
      << "right enables: " << labels(w->right) << "\n";
  return kExitNotEquivalent;
}

struct ComposeArgs {
  std::string glue;
  std::string priority;
  bool classical = false;
  bool dot = false;
  std::vector<std::string> components;
};

PlainGlue plain_glue(const InteractionSet& g) {
  PlainGlue out;
  for (const auto& a : g) {
    if (!a.act().empty() || !a.neg().empty())
      throw SemanticError("classical glue must use firing ports only");
    out.insert(a.fire());
  }
  return out;
}

int do_compose(const ComposeArgs& a, std::ostream& out) {
  const auto gamma = glue_from_json(parse_json(file_text(a.glue)));
  std::vector<Behaviour> comps;
  for (const auto& f : a.components) comps.push_back(behaviour_from_json(parse_json(file_text(f))));
  std::optional<PriorityModel> prec;
  if (!a.priority.empty()) prec = priority_from_json(parse_json(file_text(a.priority)));
  const Behaviour b = [&] {
    if (a.classical) {
      auto x = compose_classical(plain_glue(gamma), comps);
      return prec ? reachable_part(restrict_priority_classical(x, *prec)) : x;
    }
    if (prec) return compose_extended(translate_priority(plain_glue(gamma), *prec), comps);
    return compose_extended(gamma, comps);
  }();
  if (a.dot) {
    out << to_dot(b);
  } else {
    out << to_json(b).dump(2) << "\n";
  }
  return kExitOk;
}

struct SynthesizeArgs {
  std::string file;
  bool progress = false;
  bool verbose = false;
  std::size_t max_splits = 64;
};

int do_synthesize(const SynthesizeArgs& a, const Common& c, std::ostream& out) {
  const auto constraints = parse_constraints(
      file_text(a.file), c.lexing == "auto" ? PortLexing::Words : c.mode());
  SynthesisOptions opts;
  opts.max_splits = a.max_splits;
  opts.rules = c.rules();
  const auto s = synthesize(constraints, a.progress, opts);
  if (a.verbose) out << "# formula\n" << to_string(s.formula) << "\n";
  for (std::size_t i = 0; i < s.connectors.size(); ++i) {
    if (a.verbose) {
      out << "# system " << i + 1 << "\n" << to_string(s.systems[i]);
      out << "# tree " << i + 1 << "\n" << to_string(s.trees[i]) << "\n";
      out << "# connector " << i + 1 << "\n";
    }
    out << to_string(s.connectors[i]) << "\n";
  }
  return kExitOk;
}

struct RenderArgs {
  std::string kind = "tree";
  std::string input;
};

int do_render(const RenderArgs& a, const Common& c, std::ostream& out) {
  if (a.kind == "behaviour") {
    out << to_dot(behaviour_from_json(parse_json(file_text(a.input))));
  } else if (a.kind == "conn") {
    out << to_dot(parse_connector(input_text(a.input), c.mode()));
  } else {
    out << to_dot(parse_tree(input_text(a.input), c.mode()));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Typed glue operators: evaluation, normal forms, equivalence, composition and synthesis"};
  app.name("bipglue");
  app.require_subcommand(1);
  Common common;
  EvalArgs eval;
  ConvertArgs convert;
  NormalizeArgs normalize;
  EquivArgs equiv;
  ComposeArgs compose;
  SynthesizeArgs synth;
  RenderArgs render;
  const std::string expr_help = "Expression, @file, or - for stdin";

  auto* e = app.add_subcommand("eval", "Print the interaction set of a term");
  e->add_option("--kind", eval.kind)->check(CLI::IsMember(kKinds));
  e->add_option("expr", eval.expr, expr_help)->required();
  add_common(e, common);

  auto* cv = app.add_subcommand("convert", "Convert between connectors, trees and rules");
  cv->add_option("--from", convert.from)->check(CLI::IsMember({"conn", "tree", "rules"}));
  cv->add_option("--to", convert.to)->check(CLI::IsMember({"conn", "tree", "rules", "set"}));
  cv->add_flag("--firing-only", convert.firing_only, "Rules with firing effects only");
  cv->add_flag("--reduce", convert.reduce, "Drop redundant literals and monomials");
  cv->add_option("expr", convert.expr, expr_help)->required();
  add_common(cv, common);

  auto* n = app.add_subcommand("normalize", "Normal form of a tree, connector or set");
  n->add_option("--kind", normalize.kind)->check(CLI::IsMember({"tree", "conn", "set"}));
  n->add_flag("--strict", normalize.strict, "Also drop empty-firing leaf roots");
  n->add_option("expr", normalize.expr, expr_help)->required();
  add_common(n, common);

  auto* q = app.add_subcommand("equiv", "Compare two terms; exit 0 if equivalent, 1 if not");
  q->add_option("--mode", equiv.mode)->check(CLI::IsMember({"strong", "offer"}));
  q->add_option("--kind", equiv.kind)->check(CLI::IsMember(kKinds));
  q->add_option("--kind-b", equiv.kind_b, "Kind of the second term")->check(CLI::IsMember(kKinds));
  q->add_option("a", equiv.a, expr_help)->required();
  q->add_option("b", equiv.b, expr_help)->required();
  add_common(q, common);

  auto* cp = app.add_subcommand("compose", "Compose component behaviours under a glue");
  cp->add_option("--glue", compose.glue, "Glue JSON file")->required();
  cp->add_option("--priority", compose.priority, "Priority JSON file");
  cp->add_flag("--classical", compose.classical, "Classical semantics with priority restriction");
  cp->add_flag("--dot", compose.dot, "Emit DOT instead of JSON");
  cp->add_option("components", compose.components, "Behaviour JSON files")->required();

  auto* s = app.add_subcommand("synthesize", "Synthesize connectors from a constraint file");
  s->add_option("file", synth.file, "Constraint file, or - for stdin")->required();
  s->add_flag("--progress", synth.progress, "Require some port to fire");
  s->add_flag("-v,--verbose", synth.verbose, "Also print rule systems and trees");
  s->add_option("--max-splits", synth.max_splits, "Cap on case-split rule systems");
  add_common(s, common);

  auto* r = app.add_subcommand("render", "Emit Graphviz DOT");
  r->add_option("--kind", render.kind)->check(CLI::IsMember({"behaviour", "tree", "conn"}));
  r->add_option("input", render.input, "Expression or @file; a JSON file for behaviours")->required();
  add_common(r, common);

  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    reversed.push_back(looks_like_expression(*it) ? kTag + *it : *it);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }

  try {
    if (e->parsed()) return do_eval(eval, common, out);
    if (cv->parsed()) return do_convert(convert, common, out);
    if (n->parsed()) return do_normalize(normalize, common, out);
    if (q->parsed()) return do_equiv(equiv, common, out);
    if (cp->parsed()) return do_compose(compose, out);
    if (s->parsed()) return do_synthesize(synth, common, out);
    if (r->parsed()) return do_render(render, common, out);
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.message() << " at offset " << ex.position() << "\n";
    return kExitUsage;
  } catch (const SemanticError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitSemantic;
  } catch (const ContractViolation& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace bipglue
