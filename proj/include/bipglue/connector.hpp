#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bipglue/interaction_set.hpp"
#include "bipglue/text.hpp"
#include "bipglue/tree.hpp"

namespace bipglue {

enum class Role { Synchron, Trigger };

// Algebra of Connectors terms: atoms, typed subterms [x] and [x]', fusions
// of typed subterms, and unions.
class ConnectorTerm {
 public:
  enum class Kind { Port, Zero, One, Typed, Fusion, Union };

  static ConnectorTerm port(TypedPort p);
  static ConnectorTerm zero();
  static ConnectorTerm one();
  static ConnectorTerm typed(ConnectorTerm inner, Role role);
  // Throws SemanticError unless every operand is Typed.
  static ConnectorTerm fusion(std::vector<ConnectorTerm> operands);
  static ConnectorTerm sum(ConnectorTerm a, ConnectorTerm b);

  Kind kind() const { return node_->kind; }
  bool is_atom() const {
    return kind() == Kind::Port || kind() == Kind::Zero || kind() == Kind::One;
  }
  const TypedPort& port() const { return *node_->port; }
  Role role() const { return node_->role; }
  const ConnectorTerm& inner() const { return node_->operands.front(); }
  const std::vector<ConnectorTerm>& operands() const { return node_->operands; }
  const ConnectorTerm& lhs() const { return node_->operands[0]; }
  const ConnectorTerm& rhs() const { return node_->operands[1]; }

  friend bool operator==(const ConnectorTerm& a, const ConnectorTerm& b);

 private:
  struct Node {
    Kind kind;
    std::optional<TypedPort> port;
    Role role = Role::Synchron;
    std::vector<ConnectorTerm> operands;
  };
  explicit ConnectorTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// `[x]` synchron, `[x]'` trigger, `p` and `p'` shorthand inside fusions,
// juxtaposition (or `*`) fuses, `+` is union.
ConnectorTerm parse_connector(std::string_view text,
                              PortLexing mode = PortLexing::Auto);
std::string to_string(const ConnectorTerm& x);
PortSet ports_of(const ConnectorTerm& x);

InteractionSet eval_connector(const ConnectorTerm& x);

ConnectorTerm sigma(const CausalTree& t);
// Throws SemanticError for unions whose semantics is not closed under
// non-contradictory unions, which no causal tree can express.
CausalTree tau(const ConnectorTerm& x);

bool is_normal_connector(const ConnectorTerm& x);
ConnectorTerm normalize_connector(const ConnectorTerm& x);

}  // namespace bipglue
