#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "bipglue/interaction_set.hpp"
#include "bipglue/text.hpp"

namespace bipglue {

// Algebra of Interactions terms: x ::= 0 | 1 | p | x·x | x + x.
class AiTerm {
 public:
  enum class Kind { Zero, One, Port, Union, Sync };

  static AiTerm zero();
  static AiTerm one();
  static AiTerm port(TypedPort p);
  static AiTerm sum(AiTerm a, AiTerm b);
  static AiTerm sync(AiTerm a, AiTerm b);

  Kind kind() const { return node_->kind; }
  const TypedPort& port() const { return *node_->port; }
  const AiTerm& lhs() const { return node_->kids->first; }
  const AiTerm& rhs() const { return node_->kids->second; }

 private:
  struct Node {
    Kind kind;
    std::optional<TypedPort> port;
    std::shared_ptr<const std::pair<AiTerm, AiTerm>> kids;
  };
  explicit AiTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

AiTerm parse_ai(std::string_view text, PortLexing mode = PortLexing::Auto);
InteractionSet eval_ai(const AiTerm& x);
PortSet ports_of(const AiTerm& x);
std::string to_string(const AiTerm& x);

// `{p, p q!, 1}` literals; each element is lexed on its own under Auto.
InteractionSet parse_interaction_set(std::string_view text,
                                     PortLexing mode = PortLexing::Auto);
// A single interaction `p! -q r`; nullopt for a contradiction.
std::optional<Interaction> parse_interaction(std::string_view text,
                                             PortLexing mode = PortLexing::Auto);

}  // namespace bipglue
