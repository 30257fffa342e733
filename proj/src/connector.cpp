#include "bipglue/connector.hpp"

#include "bipglue/error.hpp"

namespace bipglue {

using Kind = ConnectorTerm::Kind;

ConnectorTerm ConnectorTerm::port(TypedPort p) {
  return ConnectorTerm(std::make_shared<const Node>(Node{Kind::Port, p, {}, {}}));
}

ConnectorTerm ConnectorTerm::zero() {
  return ConnectorTerm(std::make_shared<const Node>(Node{Kind::Zero, {}, {}, {}}));
}

ConnectorTerm ConnectorTerm::one() {
  return ConnectorTerm(std::make_shared<const Node>(Node{Kind::One, {}, {}, {}}));
}

ConnectorTerm ConnectorTerm::typed(ConnectorTerm inner, Role role) {
  return ConnectorTerm(std::make_shared<const Node>(
      Node{Kind::Typed, {}, role, {std::move(inner)}}));
}

ConnectorTerm ConnectorTerm::fusion(std::vector<ConnectorTerm> operands) {
  if (operands.empty()) throw SemanticError("empty fusion");
  for (const auto& op : operands)
    if (op.kind() != Kind::Typed)
      throw SemanticError("fusion operands must be typed");
  return ConnectorTerm(std::make_shared<const Node>(
      Node{Kind::Fusion, {}, Role::Synchron, std::move(operands)}));
}

ConnectorTerm ConnectorTerm::sum(ConnectorTerm a, ConnectorTerm b) {
  return ConnectorTerm(std::make_shared<const Node>(
      Node{Kind::Union, {}, Role::Synchron, {std::move(a), std::move(b)}}));
}

bool operator==(const ConnectorTerm& a, const ConnectorTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->port == b.node_->port &&
         a.node_->role == b.node_->role && a.operands() == b.operands();
}

// --- parsing ------------------------------------------------------------------

namespace {

ConnectorTerm parse_union(TokenStream& ts);

struct Operand {
  ConnectorTerm term;
  bool typed;
  std::size_t pos;
};

bool starts_operand(const TokenStream& ts) {
  return ts.at_typed_port() || ts.at(Tok::Zero) || ts.at(Tok::One) ||
         ts.at(Tok::LParen) || ts.at(Tok::LBracket);
}

Operand parse_operand(TokenStream& ts) {
  const std::size_t pos = ts.peek().pos;
  if (ts.accept(Tok::LBracket)) {
    ConnectorTerm x = parse_union(ts);
    ts.expect(Tok::RBracket);
    const Role r = ts.accept(Tok::Quote) ? Role::Trigger : Role::Synchron;
    return {ConnectorTerm::typed(x, r), true, pos};
  }
  if (ts.accept(Tok::LParen)) {
    ConnectorTerm x = parse_union(ts);
    ts.expect(Tok::RParen);
    if (ts.accept(Tok::Quote))
      return {ConnectorTerm::typed(x, Role::Trigger), true, pos};
    return {x, x.kind() == Kind::Typed, pos};
  }
  std::optional<ConnectorTerm> x;
  if (ts.accept(Tok::Zero)) {
    x = ConnectorTerm::zero();
  } else if (ts.accept(Tok::One)) {
    x = ConnectorTerm::one();
  } else if (auto tp = ts.typed_port()) {
    x = ConnectorTerm::port(*tp);
  } else {
    ts.fail("expected a connector, found " + describe(ts.peek().kind));
  }
  if (ts.accept(Tok::Quote))
    return {ConnectorTerm::typed(*x, Role::Trigger), true, pos};
  return {*x, false, pos};
}

ConnectorTerm parse_fusion(TokenStream& ts) {
  std::vector<Operand> ops{parse_operand(ts)};
  for (;;) {
    if (ts.accept(Tok::Star)) {
      ops.push_back(parse_operand(ts));
    } else if (starts_operand(ts)) {
      ops.push_back(parse_operand(ts));
    } else {
      break;
    }
  }
  if (ops.size() == 1) return ops.front().term;
  std::vector<ConnectorTerm> typed;
  for (auto& op : ops) {
    if (op.typed) {
      typed.push_back(op.term);
    } else if (op.term.kind() == Kind::Union) {
      throw ParseError("a union inside a fusion must be bracketed", op.pos);
    } else {
      typed.push_back(ConnectorTerm::typed(op.term, Role::Synchron));
    }
  }
  return ConnectorTerm::fusion(std::move(typed));
}

ConnectorTerm parse_union(TokenStream& ts) {
  ConnectorTerm x = parse_fusion(ts);
  while (ts.accept(Tok::Plus)) x = ConnectorTerm::sum(x, parse_fusion(ts));
  return x;
}

void collect_ports(const ConnectorTerm& x, PortSet& out) {
  if (x.kind() == Kind::Port) out.insert(x.port().port);
  if (!x.is_atom())
    for (const auto& op : x.operands()) collect_ports(op, out);
}

std::string operand_text(const ConnectorTerm& op) {
  const ConnectorTerm& in = op.inner();
  const bool trig = op.role() == Role::Trigger;
  if (in.is_atom()) return to_string(in) + (trig ? "'" : "");
  return "[" + to_string(in) + "]" + (trig ? "'" : "");
}

}  // namespace

ConnectorTerm parse_connector(std::string_view text, PortLexing mode) {
  TokenStream ts(text, mode);
  ConnectorTerm x = parse_union(ts);
  ts.expect_end();
  return x;
}

std::string to_string(const ConnectorTerm& x) {
  switch (x.kind()) {
    case Kind::Port:
      return to_string(x.port());
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Typed:
      return "[" + to_string(x.inner()) + "]" +
             (x.role() == Role::Trigger ? "'" : "");
    case Kind::Fusion: {
      std::string s;
      for (const auto& op : x.operands()) {
        if (!s.empty()) s += ' ';
        s += operand_text(op);
      }
      return s;
    }
    case Kind::Union:
      return to_string(x.lhs()) + " + " + to_string(x.rhs());
  }
  return "0";
}

PortSet ports_of(const ConnectorTerm& x) {
  PortSet out;
  collect_ports(x, out);
  return out;
}

// --- semantics ----------------------------------------------------------------

namespace {

InteractionSet eval_raw(const ConnectorTerm& x) {
  switch (x.kind()) {
    case Kind::Port:
      return InteractionSet({*Interaction::make({x.port()})});
    case Kind::Zero:
      return zero_set();
    case Kind::One:
      return one_set();
    case Kind::Typed:
      return eval_raw(x.inner());
    case Kind::Union:
      return set_union(eval_raw(x.lhs()), eval_raw(x.rhs()));
    case Kind::Fusion: {
      std::vector<InteractionSet> trig, sync;
      for (const auto& op : x.operands())
        (op.role() == Role::Trigger ? trig : sync).push_back(eval_raw(op.inner()));
      if (trig.empty()) {
        InteractionSet acc = one_set();
        for (const auto& y : sync) acc = set_product(acc, y);
        return acc;
      }
      InteractionSet rest = one_set();
      for (const auto& y : sync) rest = set_product(rest, set_union(one_set(), y));
      InteractionSet out;
      for (std::size_t i = 0; i < trig.size(); ++i) {
        InteractionSet term = trig[i];
        for (std::size_t k = 0; k < trig.size(); ++k)
          if (k != i) term = set_product(term, set_union(one_set(), trig[k]));
        out = set_union(out, set_product(term, rest));
      }
      return out;
    }
  }
  return zero_set();
}

}  // namespace

InteractionSet eval_connector(const ConnectorTerm& x) {
  return eval_raw(x).widened(ports_of(x));
}

// --- σ ------------------------------------------------------------------------

namespace {

ConnectorTerm label_term(const Label& l) {
  auto a = l.interaction();
  if (!a) return ConnectorTerm::zero();
  const auto tps = a->typed_ports();
  if (tps.empty()) return ConnectorTerm::one();
  if (tps.size() == 1) return ConnectorTerm::port(tps.front());
  std::vector<ConnectorTerm> ops;
  for (const auto& tp : tps)
    ops.push_back(ConnectorTerm::typed(ConnectorTerm::port(tp), Role::Synchron));
  return ConnectorTerm::fusion(std::move(ops));
}

// Retypes without nesting [[x]] when x is already typed.
ConnectorTerm as_role(const ConnectorTerm& x, Role r) {
  if (x.kind() == Kind::Typed) return ConnectorTerm::typed(x.inner(), r);
  return ConnectorTerm::typed(x, r);
}

ConnectorTerm sigma_forest(const std::vector<Node>& f);

ConnectorTerm sigma_node(const Node& n) {
  ConnectorTerm a = ConnectorTerm::typed(label_term(n.label), Role::Synchron);
  if (n.children.empty()) return a;
  return ConnectorTerm::fusion({as_role(a, Role::Trigger),
                                as_role(sigma_forest(n.children), Role::Synchron)});
}

ConnectorTerm sigma_forest(const std::vector<Node>& f) {
  if (f.empty()) return ConnectorTerm::typed(ConnectorTerm::zero(), Role::Synchron);
  if (f.size() == 1) return sigma_node(f.front());
  std::vector<ConnectorTerm> ops;
  for (const auto& n : f) ops.push_back(as_role(sigma_node(n), Role::Trigger));
  return ConnectorTerm::fusion(std::move(ops));
}

}  // namespace

ConnectorTerm sigma(const CausalTree& t) { return sigma_forest(t.roots); }

// --- τ ------------------------------------------------------------------------

namespace {

std::vector<Node> concat(std::vector<Node> a, const std::vector<Node>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// |F|·|G|: every pair of roots merges into one root over both subforests.
std::vector<Node> product(const std::vector<Node>& f, const std::vector<Node>& g) {
  std::vector<Node> out;
  for (const auto& a : f) {
    for (const auto& b : g) {
      auto ia = a.label.interaction(), ib = b.label.interaction();
      if (!ia || !ib) continue;
      auto ab = merge(*ia, *ib);
      if (!ab) continue;
      out.push_back({Label::of(*ab), concat(a.children, b.children)});
    }
  }
  return out;
}

// |F|·(1 + |G|): G hangs below every root of F.
std::vector<Node> extend(std::vector<Node> f, const std::vector<Node>& g) {
  for (auto& n : f) n.children = concat(n.children, g);
  return f;
}

std::vector<Node> tau_forest(const ConnectorTerm& x) {
  switch (x.kind()) {
    case Kind::Port:
      return {leaf(*Interaction::make({x.port()}))};
    case Kind::Zero:
      return {};
    case Kind::One:
      return {leaf(Interaction{})};
    case Kind::Typed:
      return tau_forest(x.inner());
    case Kind::Union: {
      // Summands of the whole union chain, checked once.
      std::vector<ConnectorTerm> todo{x};
      std::vector<Node> f;
      while (!todo.empty()) {
        ConnectorTerm y = todo.back();
        todo.pop_back();
        if (y.kind() == Kind::Union) {
          todo.push_back(y.rhs());
          todo.push_back(y.lhs());
        } else {
          f = concat(std::move(f), tau_forest(y));
        }
      }
      if (eval_tree(CausalTree{f}).interactions() != eval_raw(x).interactions())
        throw SemanticError("'" + to_string(x) +
                            "' is not closed under unions and has no causal tree");
      return f;
    }
    case Kind::Fusion: {
      std::vector<Node> trig, sync;
      bool any_trigger = false;
      std::optional<std::vector<Node>> prod;
      for (const auto& op : x.operands()) {
        auto f = tau_forest(op.inner());
        if (op.role() == Role::Trigger) {
          any_trigger = true;
          trig = concat(std::move(trig), f);
        } else {
          sync = concat(std::move(sync), f);
          prod = prod ? product(*prod, f) : f;
        }
      }
      if (!any_trigger) return *prod;
      return extend(std::move(trig), sync);
    }
  }
  return {};
}

}  // namespace

CausalTree tau(const ConnectorTerm& x) { return {tau_forest(x)}; }

// --- normal forms -------------------------------------------------------------

namespace {

bool synchron_port(const ConnectorTerm& op) {
  return op.kind() == Kind::Typed && op.role() == Role::Synchron &&
         op.inner().kind() == Kind::Port;
}

// A synchronization of ports (or a lone atom).
bool is_bottom(const ConnectorTerm& x) {
  if (x.is_atom()) return true;
  if (x.kind() != Kind::Fusion) return false;
  for (const auto& op : x.operands())
    if (!synchron_port(op)) return false;
  return true;
}

std::optional<bool> bottom_fires(const ConnectorTerm& x) {
  std::vector<TypedPort> tps;
  if (x.kind() == Kind::Zero) return std::nullopt;
  if (x.kind() == Kind::One) return false;
  if (x.kind() == Kind::Port) return x.port().typing == Typing::Firing;
  PortSet seen;
  bool fires = false;
  for (const auto& op : x.operands()) {
    const TypedPort& tp = op.inner().port();
    if (!seen.insert(tp.port).second) return std::nullopt;
    fires = fires || tp.typing == Typing::Firing;
  }
  return fires;
}

bool normal_typed(const ConnectorTerm& op, bool triggers_above) {
  if (op.kind() != Kind::Typed) return false;
  const ConnectorTerm& in = op.inner();
  if (is_bottom(in)) {
    auto fires = bottom_fires(in);
    if (!fires) return false;
    return *fires || (op.role() == Role::Trigger && triggers_above);
  }
  if (in.kind() != Kind::Fusion) return false;
  const bool below = triggers_above && op.role() == Role::Trigger;
  bool trig = false;
  for (const auto& o : in.operands()) {
    trig = trig || o.role() == Role::Trigger;
    if (!normal_typed(o, below)) return false;
  }
  return trig;
}

}  // namespace

bool is_normal_connector(const ConnectorTerm& x) {
  // The whole connector is the one bottom allowed to lack firing ports
  // without being a trigger; [0] is the normal form of 0.
  if (x.kind() == Kind::Zero) return true;
  if (x.kind() == Kind::Typed && x.inner().kind() == Kind::Zero) return true;
  if (is_bottom(x)) return bottom_fires(x).has_value();
  if (x.kind() == Kind::Typed) {
    if (is_bottom(x.inner())) return bottom_fires(x.inner()).has_value();
    return normal_typed(x, true);
  }
  if (x.kind() != Kind::Fusion) return false;
  bool trig = false;
  for (const auto& o : x.operands()) {
    trig = trig || o.role() == Role::Trigger;
    if (!normal_typed(o, true)) return false;
  }
  return trig;
}

ConnectorTerm normalize_connector(const ConnectorTerm& x) {
  return sigma(normalize_tree(tau(x)));
}

}  // namespace bipglue
