#include "bipglue/ai.hpp"

#include "bipglue/error.hpp"

namespace bipglue {

AiTerm AiTerm::zero() {
  return AiTerm(std::make_shared<const Node>(Node{Kind::Zero, {}, {}}));
}

AiTerm AiTerm::one() {
  return AiTerm(std::make_shared<const Node>(Node{Kind::One, {}, {}}));
}

AiTerm AiTerm::port(TypedPort p) {
  return AiTerm(std::make_shared<const Node>(Node{Kind::Port, p, {}}));
}

AiTerm AiTerm::sum(AiTerm a, AiTerm b) {
  return AiTerm(std::make_shared<const Node>(
      Node{Kind::Union, {},
           std::make_shared<const std::pair<AiTerm, AiTerm>>(std::move(a),
                                                             std::move(b))}));
}

AiTerm AiTerm::sync(AiTerm a, AiTerm b) {
  return AiTerm(std::make_shared<const Node>(
      Node{Kind::Sync, {},
           std::make_shared<const std::pair<AiTerm, AiTerm>>(std::move(a),
                                                             std::move(b))}));
}

namespace {

AiTerm parse_union(TokenStream& ts);

bool starts_factor(const TokenStream& ts) {
  return ts.at_typed_port() || ts.at(Tok::Zero) || ts.at(Tok::One) ||
         ts.at(Tok::LParen);
}

AiTerm parse_factor(TokenStream& ts) {
  if (ts.accept(Tok::Zero)) return AiTerm::zero();
  if (ts.accept(Tok::One)) return AiTerm::one();
  if (ts.accept(Tok::LParen)) {
    AiTerm x = parse_union(ts);
    ts.expect(Tok::RParen);
    return x;
  }
  if (auto tp = ts.typed_port()) return AiTerm::port(*tp);
  ts.fail("expected a term, found " + describe(ts.peek().kind));
}

AiTerm parse_sync(TokenStream& ts) {
  AiTerm x = parse_factor(ts);
  for (;;) {
    if (ts.accept(Tok::Star)) {
      x = AiTerm::sync(x, parse_factor(ts));
    } else if (starts_factor(ts)) {
      x = AiTerm::sync(x, parse_factor(ts));
    } else {
      return x;
    }
  }
}

AiTerm parse_union(TokenStream& ts) {
  AiTerm x = parse_sync(ts);
  while (ts.accept(Tok::Plus)) x = AiTerm::sum(x, parse_sync(ts));
  return x;
}

void collect_ports(const AiTerm& x, PortSet& out) {
  switch (x.kind()) {
    case AiTerm::Kind::Port:
      out.insert(x.port().port);
      break;
    case AiTerm::Kind::Union:
    case AiTerm::Kind::Sync:
      collect_ports(x.lhs(), out);
      collect_ports(x.rhs(), out);
      break;
    default:
      break;
  }
}

}  // namespace

AiTerm parse_ai(std::string_view text, PortLexing mode) {
  TokenStream ts(text, mode);
  AiTerm x = parse_union(ts);
  ts.expect_end();
  return x;
}

PortSet ports_of(const AiTerm& x) {
  PortSet out;
  collect_ports(x, out);
  return out;
}

InteractionSet eval_ai(const AiTerm& x) {
  switch (x.kind()) {
    case AiTerm::Kind::Zero:
      return zero_set();
    case AiTerm::Kind::One:
      return one_set();
    case AiTerm::Kind::Port:
      return InteractionSet({*Interaction::make({x.port()})});
    case AiTerm::Kind::Union:
      return set_union(eval_ai(x.lhs()), eval_ai(x.rhs()));
    case AiTerm::Kind::Sync:
      return set_product(eval_ai(x.lhs()), eval_ai(x.rhs()));
  }
  return zero_set();
}

std::string to_string(const AiTerm& x) {
  switch (x.kind()) {
    case AiTerm::Kind::Zero:
      return "0";
    case AiTerm::Kind::One:
      return "1";
    case AiTerm::Kind::Port:
      return to_string(x.port());
    case AiTerm::Kind::Union:
      return to_string(x.lhs()) + " + " + to_string(x.rhs());
    case AiTerm::Kind::Sync: {
      auto side = [](const AiTerm& t) {
        auto s = to_string(t);
        return t.kind() == AiTerm::Kind::Union ? "(" + s + ")" : s;
      };
      return side(x.lhs()) + " * " + side(x.rhs());
    }
  }
  return "0";
}

std::optional<Interaction> parse_interaction(std::string_view text,
                                             PortLexing mode) {
  TokenStream ts(text, mode);
  std::vector<TypedPort> raw;
  if (ts.accept(Tok::One)) {
    ts.expect_end();
    return Interaction{};
  }
  while (!ts.at(Tok::End)) {
    auto tp = ts.typed_port();
    if (!tp) ts.fail("expected a typed port, found " + describe(ts.peek().kind));
    raw.push_back(*tp);
  }
  return Interaction::make(raw);
}

InteractionSet parse_interaction_set(std::string_view text, PortLexing mode) {
  std::size_t open = text.find_first_not_of(" \t\r\n");
  std::size_t close = text.find_last_not_of(" \t\r\n");
  if (open == std::string_view::npos || text[open] != '{')
    throw ParseError("expected '{'", open == std::string_view::npos ? 0 : open);
  if (text[close] != '}') throw ParseError("expected '}'", close);
  InteractionSet out;
  std::string_view body = text.substr(open + 1, close - open - 1);
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = body.find(',', start);
    std::string_view item = body.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    auto b = item.find_first_not_of(" \t\r\n");
    auto e = item.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos)
      throw ParseError("empty set element", open + 1 + start);
    item = item.substr(b, e - b + 1);
    try {
      if (auto a = parse_interaction(item, mode)) out.insert(*a);
    } catch (const ParseError& err) {
      throw ParseError(err.message(), open + 1 + start + b + err.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace bipglue
