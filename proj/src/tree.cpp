#include "bipglue/tree.hpp"

#include <algorithm>

#include "bipglue/error.hpp"

namespace bipglue {

Label Label::of(const Interaction& a) {
  Label l;
  for (const auto& tp : a.typed_ports()) l.ports.insert(tp);
  l.one = a.empty();
  return l;
}

std::optional<Interaction> Label::interaction() const {
  if (zero) return std::nullopt;
  std::vector<TypedPort> raw(ports.begin(), ports.end());
  return Interaction::make(raw);
}

bool Label::empty_firing() const {
  auto a = interaction();
  return a && a->fire().empty();
}

bool Label::canonical() const {
  auto a = interaction();
  return a && of(*a) == *this;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  const auto ia = a.interaction(), ib = b.interaction();
  if (auto c = ia <=> ib; c != 0) return c;
  if (auto c = a.ports <=> b.ports; c != 0) return c;
  if (auto c = a.zero <=> b.zero; c != 0) return c;
  return a.one <=> b.one;
}

std::strong_ordering operator<=>(const Node& a, const Node& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children.begin(), a.children.end(), b.children.begin(),
      b.children.end());
}

Node leaf(const Interaction& a) { return {Label::of(a), {}}; }

Node chain(const Interaction& a, std::vector<Node> children) {
  return {Label::of(a), std::move(children)};
}

// --- parsing ------------------------------------------------------------------

namespace {

std::vector<Node> parse_forest(TokenStream& ts);

bool starts_label_item(const TokenStream& ts) {
  return ts.at_typed_port() || ts.at(Tok::Zero) || ts.at(Tok::One);
}

Label parse_label(TokenStream& ts) {
  Label l;
  if (!starts_label_item(ts))
    ts.fail("expected a node label, found " + describe(ts.peek().kind));
  while (starts_label_item(ts)) {
    if (ts.accept(Tok::Zero)) {
      l.zero = true;
    } else if (ts.accept(Tok::One)) {
      l.one = true;
    } else {
      l.ports.insert(*ts.typed_port());
    }
  }
  return l;
}

std::vector<Node> parse_chain(TokenStream& ts) {
  if (ts.accept(Tok::LParen)) {
    auto forest = parse_forest(ts);
    ts.expect(Tok::RParen);
    if (ts.at(Tok::Arrow)) ts.fail("only a node label can precede '->'");
    return forest;
  }
  Node n{parse_label(ts), {}};
  if (ts.accept(Tok::Arrow)) n.children = parse_chain(ts);
  return {std::move(n)};
}

std::vector<Node> parse_forest(TokenStream& ts) {
  auto out = parse_chain(ts);
  while (ts.accept(Tok::Parallel)) {
    auto more = parse_chain(ts);
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  }
  return out;
}

std::string node_text(const Node& n);

std::string forest_text(const std::vector<Node>& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += " (+) ";
    out += node_text(f[i]);
  }
  return out;
}

std::string node_text(const Node& n) {
  std::string out = to_string(n.label);
  if (n.children.empty()) return out;
  out += " -> ";
  if (n.children.size() == 1) return out + node_text(n.children.front());
  return out + "(" + forest_text(n.children) + ")";
}

void collect_ports(const std::vector<Node>& f, PortSet& out) {
  for (const auto& n : f) {
    for (const auto& tp : n.label.ports) out.insert(tp.port);
    collect_ports(n.children, out);
  }
}

InteractionSet eval_forest(const std::vector<Node>& f);

InteractionSet eval_node(const Node& n) {
  InteractionSet out;
  const auto a = n.label.interaction();
  if (!a) return out;
  out.insert(*a);
  for (const auto& x : eval_forest(n.children))
    if (auto m = merge(*a, x)) out.insert(*m);
  return out;
}

InteractionSet eval_forest(const std::vector<Node>& f) {
  InteractionSet acc;
  for (const auto& n : f) acc = set_closure_union(acc, eval_node(n));
  return acc;
}

std::vector<Node> ordered(const std::vector<Node>& f) {
  std::vector<Node> out;
  out.reserve(f.size());
  for (const auto& n : f) out.push_back({n.label, ordered(n.children)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

CausalTree parse_tree(std::string_view text, PortLexing mode) {
  TokenStream ts(text, mode);
  CausalTree t;
  if (!ts.at(Tok::End)) t.roots = parse_forest(ts);
  ts.expect_end();
  return t;
}

std::string to_string(const Label& l) {
  std::string out;
  for (const auto& tp : l.ports) {
    if (!out.empty()) out += ' ';
    out += to_string(tp);
  }
  auto add = [&](const char* s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (l.zero) add("0");
  if (l.one || out.empty()) add("1");
  return out;
}

std::string to_string(const CausalTree& t) {
  if (t.roots.empty()) return "0";
  return forest_text(t.roots);
}

PortSet ports_of(const CausalTree& t) {
  PortSet out;
  collect_ports(t.roots, out);
  return out;
}

InteractionSet eval_tree(const CausalTree& t) {
  return eval_forest(t.roots).widened(ports_of(t));
}

CausalTree canonical_order(const CausalTree& t) { return {ordered(t.roots)}; }

bool structurally_equal(const CausalTree& a, const CausalTree& b) {
  return canonical_order(a) == canonical_order(b);
}

bool equiv_tree(const CausalTree& a, const CausalTree& b, EquivMode mode,
                const OfferOptions& opts) {
  const PortSet u = port_union(ports_of(a), ports_of(b));
  const auto ea = eval_tree(a).widened(u);
  const auto eb = eval_tree(b).widened(u);
  return mode == EquivMode::Strong ? equiv_strong(ea, eb)
                                   : equiv_offer(ea, eb, opts);
}

}  // namespace bipglue
