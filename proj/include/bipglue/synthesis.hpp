#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bipglue/connector.hpp"
#include "bipglue/rules.hpp"

namespace bipglue {

// Boolean constraints over typed port variables: p (activation), p! (firing)
// and -p (negative).
class BoolFormula {
 public:
  enum class Kind { Const, Var, Not, And, Or, Implies, Iff };

  static BoolFormula constant(bool v);
  static BoolFormula var(TypedPort v);
  static BoolFormula negation(BoolFormula f);
  static BoolFormula conj(std::vector<BoolFormula> fs);
  static BoolFormula disj(std::vector<BoolFormula> fs);
  static BoolFormula implies(BoolFormula a, BoolFormula b);
  static BoolFormula iff(BoolFormula a, BoolFormula b);

  Kind kind() const { return node_->kind; }
  bool value() const { return node_->value; }
  const TypedPort& variable() const { return *node_->var; }
  const std::vector<BoolFormula>& args() const { return node_->args; }

  friend bool operator==(const BoolFormula& a, const BoolFormula& b);

 private:
  struct Node {
    Kind kind;
    bool value = false;
    std::optional<TypedPort> var;
    std::vector<BoolFormula> args;
  };
  explicit BoolFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Operators `~ & | => <=>` (also ¬ ∧ ∨ ⇒ ⇔), juxtaposition is `&`, constants
// tt and ff. Precedence ~ > & > | > => > <=>; `=>` associates to the right.
BoolFormula parse_formula(std::string_view text, PortLexing mode = PortLexing::Words);
std::string to_string(const BoolFormula& f);
PortSet ports_of(const BoolFormula& f);

// Truth under the characteristic valuation of a, with ~p read as -p and
// ~-p as p (p! also makes p true).
bool satisfies(const Interaction& a, const BoolFormula& f);
// Truth of a hint under a port configuration: p! means fired, p offered,
// -p not offered.
bool holds_in_config(const BoolFormula& f, const PortSet& fired,
                     const PortSet& offered);

// Conjoins p! => p and ~(p & -p) for every mentioned port.
BoolFormula close_formula(const BoolFormula& f);
// The disjunction of p! over the ports.
BoolFormula progress_formula(const PortSet& ports);

struct SynthesisOptions {
  std::size_t max_splits = 64;
  RulesOptions rules;
};

// Firing-only systems whose union of semantics is the satisfying set of f
// (offer-equivalent to it once hints are used). Hints are conjoined to f and
// also used to drop activation/negative literals they imply. Systems with
// empty semantics are dropped. Throws SemanticError when case splitting
// needs more than max_splits systems.
std::vector<CausalRuleSystem> to_rule_systems(const BoolFormula& f,
                                              const std::vector<BoolFormula>& hints = {},
                                              const SynthesisOptions& = {});

// Canonical interactions over the universe satisfying f.
InteractionSet satisfying_set(const BoolFormula& f, const PortSet& universe,
                              const RulesOptions& = {});
// Admissible configurations: every hint holds. Masks index the given
// universe, so compare sets widened to exactly that universe.
ConfigFilter hint_filter(const std::vector<BoolFormula>& hints,
                         const PortSet& universe);

// Constraint files: one formula per line (conjoined), `#` comments, and
// `hint: formula` lines for behavioural knowledge.
struct Constraints {
  std::vector<BoolFormula> formulas;
  std::vector<BoolFormula> hints;
};
Constraints parse_constraints(std::string_view text,
                              PortLexing mode = PortLexing::Words);
PortSet ports_of(const Constraints& c);

struct Synthesis {
  BoolFormula formula = BoolFormula::constant(true);  // closed, hints included
  std::vector<CausalRuleSystem> systems;
  std::vector<CausalTree> trees;
  std::vector<ConnectorTerm> connectors;
};

Synthesis synthesize(const Constraints& c, bool progress = false,
                     const SynthesisOptions& = {});
std::vector<ConnectorTerm> synthesize(const BoolFormula& f,
                                      const SynthesisOptions& = {});

}  // namespace bipglue
