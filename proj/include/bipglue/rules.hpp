#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "bipglue/equivalence.hpp"
#include "bipglue/text.hpp"
#include "bipglue/tree.hpp"

namespace bipglue {

// The effect of a rule: a typed port variable, or nullopt for tt.
using Effect = std::optional<TypedPort>;
std::string to_string(const Effect& e);

// A positive formula in DNF. Monomials are interactions read as conjunctions
// of variables; an activation variable also holds when the port fires. No
// monomials is ff, the empty monomial is tt.
class CauseFormula {
 public:
  CauseFormula() = default;
  explicit CauseFormula(std::set<Interaction> monomials);
  static CauseFormula tt() { return CauseFormula({Interaction{}}); }
  static CauseFormula ff() { return {}; }

  const std::set<Interaction>& monomials() const noexcept { return monos_; }
  bool is_tt() const { return monos_.contains(Interaction{}); }
  bool is_ff() const { return monos_.empty(); }
  PortSet ports() const;

  friend bool operator==(const CauseFormula&, const CauseFormula&) = default;

 private:
  std::set<Interaction> monos_;
};

CauseFormula disjoin(const CauseFormula& a, const CauseFormula& b);
// Pairwise merge; contradictory monomials vanish.
CauseFormula conjoin(const CauseFormula& a, const CauseFormula& b);
// a1 ∨ a1 a2 = a1.
CauseFormula absorbed(const CauseFormula& f);
std::string to_string(const CauseFormula& f);

enum class RuleMode { Full, FiringOnly };

// Exactly one rule per effect of the mode's effect universe: tt plus p! for
// every port, and in full mode also p and -p.
class CausalRuleSystem {
 public:
  // Missing effects default to tt => tt and p => ff. Throws SemanticError
  // for effects outside the mode, ports outside the universe, or a cause
  // mentioning its own effect port.
  CausalRuleSystem(PortSet universe, RuleMode mode,
                   std::map<Effect, CauseFormula> rules);

  const PortSet& universe() const noexcept { return universe_; }
  RuleMode mode() const noexcept { return mode_; }
  const std::map<Effect, CauseFormula>& rules() const noexcept { return rules_; }
  const CauseFormula& cause(const Effect& e) const;

  friend bool operator==(const CausalRuleSystem&,
                         const CausalRuleSystem&) = default;

 private:
  PortSet universe_;
  RuleMode mode_;
  std::map<Effect, CauseFormula> rules_;
};

std::vector<Effect> effect_universe(const PortSet& universe, RuleMode mode);

// Disjunction over root paths reaching a node that holds the effect (p!
// counts as holding p) of the path's variables, minus the effect's port.
CauseFormula cause_of(const CausalTree& t, const Effect& e);
// Universe defaults to the ports of t.
CausalRuleSystem rules_of_tree(const CausalTree& t, RuleMode mode,
                               std::optional<PortSet> universe = {});

struct RulesOptions {
  std::size_t max_ports = 12;  // 4^n candidates are enumerated
  Execution execution = Execution::Parallel;
};

// Canonical interactions over the universe whose characteristic valuation
// satisfies every rule. Throws SemanticError above max_ports.
InteractionSet eval_rules(const CausalRuleSystem& r, const RulesOptions& = {});

// Absorption inside every cause.
CausalRuleSystem simplify_rules(const CausalRuleSystem& r);
// Greedily drops cause literals and monomials while |R| stays the same set.
CausalRuleSystem reduce_rules(const CausalRuleSystem& r,
                              const RulesOptions& = {});

struct TreeOfRulesOptions {
  RulesOptions rules;
  // The result is checked against |R| when the universe is at most this.
  std::size_t check_max_ports = 12;
};

// Throws ContractViolation if the tree is not offer-equivalent to |R|.
CausalTree tree_of_rules(const CausalRuleSystem& r,
                         const TreeOfRulesOptions& = {});

// One rule per line: `p! => m1 | m2`, `tt => ...`, monomials of juxtaposed
// typed ports, `tt`/`ff` constants, `#` comments. Full mode iff some effect
// is an activation or negative variable.
CausalRuleSystem parse_rules(std::string_view text,
                             PortLexing mode = PortLexing::Auto,
                             std::optional<PortSet> universe = {});
std::string to_string(const CausalRuleSystem& r);

}  // namespace bipglue
