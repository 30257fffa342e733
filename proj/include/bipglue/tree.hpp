#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bipglue/equivalence.hpp"
#include "bipglue/interaction_set.hpp"
#include "bipglue/text.hpp"

namespace bipglue {

// A node label as written: typed ports plus the constants 0 and 1. Kept raw
// so that the label axioms can be applied as explicit steps.
struct Label {
  std::set<TypedPort> ports;
  bool zero = false;
  bool one = false;

  static Label of(const Interaction& a);
  static Label constant_zero() { return {{}, true, false}; }
  static Label constant_one() { return {{}, false, true}; }

  // The product of the items; nullopt when it is 0.
  std::optional<Interaction> interaction() const;
  bool is_zero() const { return !interaction().has_value(); }
  // Non-zero with empty firing support.
  bool empty_firing() const;
  bool canonical() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
};

struct Node {
  Label label;
  std::vector<Node> children;

  friend bool operator==(const Node&, const Node&) = default;
  friend std::strong_ordering operator<=>(const Node& a, const Node& b);
};

// A forest; the roots are combined with ⊕. The empty forest is 0.
struct CausalTree {
  std::vector<Node> roots;

  friend bool operator==(const CausalTree&, const CausalTree&) = default;
};

Node leaf(const Interaction& a);
Node chain(const Interaction& a, std::vector<Node> children);

// DSL: labels are juxtaposed typed ports and constants, `->` is causality
// (right associative), `(+)` is ⊕, parentheses group.
CausalTree parse_tree(std::string_view text, PortLexing mode = PortLexing::Auto);
std::string to_string(const CausalTree& t);
std::string to_string(const Label& l);

PortSet ports_of(const CausalTree& t);
InteractionSet eval_tree(const CausalTree& t);

// Siblings sorted and deduplicated recursively: equality modulo ⊕ being
// associative, commutative and idempotent.
CausalTree canonical_order(const CausalTree& t);
bool structurally_equal(const CausalTree& a, const CausalTree& b);

// --- rewriting ------------------------------------------------------------------

enum class Rule {
  Axiom1a,  // 0 in a label makes the label 0
  Axiom1b,  // 1 in a label with other items is dropped
  Axiom1c,  // p! absorbs p
  Axiom1d,  // -p with p or p! makes the label 0
  Axiom2,   // forest sorting, deduplication and dropping of 0 leaves
  Axiom3,   // a -> 0 = a
  Axiom4,   // 0 -> t = 0
  Axiom5,   // c -> a -> b -> t = c -> ab -> t when fire(a) is empty
  Axiom6,   // ap -> b = ap -> bp
  Axiom7,   // a -> (t1 (+) t2) = a -> t1 (+) a -> t2
  NoFiringLeaf,   // a -> b = a when fire(b) is empty
  OneNode,        // a -> 1 -> t = a -> t
  PushdownNode,   // c -> a -> (+)(b_i -> t_i) = c -> (+)(a b_i -> t_i)
};

std::string rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
const std::vector<Rule>& all_rules();

// Child indices from the roots. For Axiom2 the path names the parent whose
// children are rewritten, and the empty path denotes the roots; for every
// other rule it names the node the rule applies to.
using Position = std::vector<std::size_t>;

struct RewriteStep {
  Rule rule;
  Position position;
  std::optional<TypedPort> port;  // Axiom1c, Axiom1d, Axiom6
  bool reverse = false;           // Axiom6 removes, Axiom7 merges siblings
};

// Throws SemanticError when the step does not apply.
CausalTree rewrite_axiom(const CausalTree& t, const RewriteStep& step);
// Every step applicable to t, in a deterministic order.
std::vector<RewriteStep> applicable_steps(const CausalTree& t);
std::string to_string(const RewriteStep& s);

// --- normal forms -------------------------------------------------------------

struct NormalizeOptions {
  // Also drop roots that are leaves with empty firing support.
  bool strict = false;
};

CausalTree normalize_tree(const CausalTree& t, const NormalizeOptions& = {});
bool is_normal_tree(const CausalTree& t);

enum class EquivMode { Strong, Offer };
// Compares evaluations over the union of both universes.
bool equiv_tree(const CausalTree& a, const CausalTree& b, EquivMode mode,
                const OfferOptions& opts = {});

}  // namespace bipglue
