#include "bipglue/synthesis.hpp"

#include <algorithm>
#include <exception>

#include "bipglue/error.hpp"
#include "bipglue/masks.hpp"

namespace bipglue {

using FK = BoolFormula::Kind;

BoolFormula BoolFormula::constant(bool v) {
  return BoolFormula(std::make_shared<const Node>(Node{FK::Const, v, {}, {}}));
}

BoolFormula BoolFormula::var(TypedPort v) {
  return BoolFormula(std::make_shared<const Node>(Node{FK::Var, false, v, {}}));
}

BoolFormula BoolFormula::negation(BoolFormula f) {
  return BoolFormula(
      std::make_shared<const Node>(Node{FK::Not, false, {}, {std::move(f)}}));
}

BoolFormula BoolFormula::conj(std::vector<BoolFormula> fs) {
  if (fs.empty()) return constant(true);
  if (fs.size() == 1) return fs.front();
  return BoolFormula(std::make_shared<const Node>(Node{FK::And, false, {}, std::move(fs)}));
}

BoolFormula BoolFormula::disj(std::vector<BoolFormula> fs) {
  if (fs.empty()) return constant(false);
  if (fs.size() == 1) return fs.front();
  return BoolFormula(std::make_shared<const Node>(Node{FK::Or, false, {}, std::move(fs)}));
}

BoolFormula BoolFormula::implies(BoolFormula a, BoolFormula b) {
  return BoolFormula(std::make_shared<const Node>(
      Node{FK::Implies, false, {}, {std::move(a), std::move(b)}}));
}

BoolFormula BoolFormula::iff(BoolFormula a, BoolFormula b) {
  return BoolFormula(std::make_shared<const Node>(
      Node{FK::Iff, false, {}, {std::move(a), std::move(b)}}));
}

bool operator==(const BoolFormula& a, const BoolFormula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->value == b.node_->value &&
         a.node_->var == b.node_->var && a.args() == b.args();
}

// --- parsing and printing -----------------------------------------------------

namespace {

BoolFormula parse_iff(TokenStream& ts);

bool starts_unary(const TokenStream& ts) {
  return ts.at(Tok::Tilde) || ts.at(Tok::True) || ts.at(Tok::False) ||
         ts.at(Tok::LParen) || ts.at_typed_port();
}

BoolFormula parse_unary(TokenStream& ts) {
  if (ts.accept(Tok::Tilde)) return BoolFormula::negation(parse_unary(ts));
  if (ts.accept(Tok::True)) return BoolFormula::constant(true);
  if (ts.accept(Tok::False)) return BoolFormula::constant(false);
  if (ts.accept(Tok::LParen)) {
    BoolFormula f = parse_iff(ts);
    ts.expect(Tok::RParen);
    return f;
  }
  if (auto tp = ts.typed_port()) return BoolFormula::var(*tp);
  ts.fail("expected a formula, found " + describe(ts.peek().kind));
}

BoolFormula parse_and(TokenStream& ts) {
  std::vector<BoolFormula> fs{parse_unary(ts)};
  for (;;) {
    if (ts.accept(Tok::Amp)) {
      fs.push_back(parse_unary(ts));
    } else if (starts_unary(ts)) {
      fs.push_back(parse_unary(ts));
    } else {
      return BoolFormula::conj(std::move(fs));
    }
  }
}

BoolFormula parse_or(TokenStream& ts) {
  std::vector<BoolFormula> fs{parse_and(ts)};
  while (ts.accept(Tok::Bar)) fs.push_back(parse_and(ts));
  return BoolFormula::disj(std::move(fs));
}

BoolFormula parse_implies(TokenStream& ts) {
  BoolFormula a = parse_or(ts);
  if (ts.accept(Tok::Implies)) return BoolFormula::implies(a, parse_implies(ts));
  return a;
}

BoolFormula parse_iff(TokenStream& ts) {
  BoolFormula a = parse_implies(ts);
  while (ts.accept(Tok::Iff)) a = BoolFormula::iff(a, parse_implies(ts));
  return a;
}

int precedence(FK k) {
  switch (k) {
    case FK::Iff: return 1;
    case FK::Implies: return 2;
    case FK::Or: return 3;
    case FK::And: return 4;
    case FK::Not: return 5;
    default: return 6;
  }
}

std::string text(const BoolFormula& f);

std::string child_text(const BoolFormula& c, int parent, bool strict) {
  const int p = precedence(c.kind());
  const bool paren = strict ? p <= parent : p < parent;
  return paren ? "(" + text(c) + ")" : text(c);
}

std::string text(const BoolFormula& f) {
  switch (f.kind()) {
    case FK::Const:
      return f.value() ? "tt" : "ff";
    case FK::Var:
      return to_string(f.variable());
    case FK::Not:
      return "~" + child_text(f.args()[0], 5, false);
    case FK::And:
    case FK::Or: {
      const int p = precedence(f.kind());
      std::string s;
      for (const auto& a : f.args()) {
        if (!s.empty()) s += f.kind() == FK::And ? " & " : " | ";
        s += child_text(a, p, false);
      }
      return s;
    }
    case FK::Implies:
      return child_text(f.args()[0], 2, true) + " => " +
             child_text(f.args()[1], 2, false);
    case FK::Iff:
      return child_text(f.args()[0], 1, false) + " <=> " +
             child_text(f.args()[1], 1, true);
  }
  return "ff";
}

void collect(const BoolFormula& f, PortSet& out) {
  if (f.kind() == FK::Var) out.insert(f.variable().port);
  for (const auto& a : f.args()) collect(a, out);
}

// ~(p & -p): always true of canonical interactions.
bool is_axiom(const BoolFormula& f) {
  if (f.kind() != FK::Not) return false;
  const auto& g = f.args()[0];
  if (g.kind() != FK::And || g.args().size() != 2) return false;
  const auto& x = g.args()[0];
  const auto& y = g.args()[1];
  if (x.kind() != FK::Var || y.kind() != FK::Var) return false;
  const auto& a = x.variable();
  const auto& b = y.variable();
  if (a.port != b.port) return false;
  return (a.typing == Typing::Activation && b.typing == Typing::Negative) ||
         (a.typing == Typing::Negative && b.typing == Typing::Activation);
}

}  // namespace

BoolFormula parse_formula(std::string_view text, PortLexing mode) {
  TokenStream ts(text, mode);
  BoolFormula f = parse_iff(ts);
  ts.expect_end();
  return f;
}

std::string to_string(const BoolFormula& f) { return text(f); }

PortSet ports_of(const BoolFormula& f) {
  PortSet out;
  collect(f, out);
  return out;
}

// --- evaluation ---------------------------------------------------------------

namespace {

// Flattened formula over port bits.
struct Program {
  struct Op {
    FK kind;
    bool value = false;
    bool axiom = false;
    Typing typing = Typing::Activation;
    std::uint32_t bit = 0;
    std::vector<std::size_t> kids;
  };
  std::vector<Op> ops;
  std::size_t root = 0;
};

std::size_t emit(const BoolFormula& f, const PortIndex& idx, Program& p) {
  Program::Op op;
  op.kind = f.kind();
  op.value = f.value();
  op.axiom = is_axiom(f);
  if (f.kind() == FK::Var) {
    op.typing = f.variable().typing;
    op.bit = std::uint32_t{1} << idx.index(f.variable().port);
  }
  if (!op.axiom)
    for (const auto& a : f.args()) op.kids.push_back(emit(a, idx, p));
  p.ops.push_back(std::move(op));
  return p.ops.size() - 1;
}

Program compile_formula(const BoolFormula& f, const PortIndex& idx) {
  Program p;
  p.root = emit(f, idx, p);
  return p;
}

// Truth of f (neg = false) or of its negation with ~p read as -p.
bool run(const Program& p, std::size_t i, const MaskedInteraction& a, bool neg) {
  const auto& op = p.ops[i];
  const std::uint32_t active = a.act | a.fire;
  if (op.axiom) return !neg;
  switch (op.kind) {
    case FK::Const:
      return op.value != neg;
    case FK::Var:
      switch (op.typing) {
        case Typing::Firing:
          return ((a.fire & op.bit) != 0) != neg;
        case Typing::Activation:
          return neg ? (a.neg & op.bit) != 0 : (active & op.bit) != 0;
        case Typing::Negative:
          return neg ? (active & op.bit) != 0 : (a.neg & op.bit) != 0;
      }
      return false;
    case FK::Not:
      return run(p, op.kids[0], a, !neg);
    case FK::And:
    case FK::Or: {
      const bool all = (op.kind == FK::And) != neg;
      for (auto k : op.kids) {
        const bool v = run(p, k, a, neg);
        if (all && !v) return false;
        if (!all && v) return true;
      }
      return all;
    }
    case FK::Implies: {
      const auto l = op.kids[0], r = op.kids[1];
      if (neg) return run(p, l, a, false) && run(p, r, a, true);
      return run(p, l, a, true) || run(p, r, a, false);
    }
    case FK::Iff: {
      const auto l = op.kids[0], r = op.kids[1];
      if (neg)
        return (run(p, l, a, false) && run(p, r, a, true)) ||
               (run(p, l, a, true) && run(p, r, a, false));
      return (run(p, l, a, false) && run(p, r, a, false)) ||
             (run(p, l, a, true) && run(p, r, a, true));
    }
  }
  return false;
}

bool run_config(const Program& p, std::size_t i, std::uint32_t fired,
                std::uint32_t offered) {
  const auto& op = p.ops[i];
  if (op.axiom) return true;
  switch (op.kind) {
    case FK::Const:
      return op.value;
    case FK::Var:
      switch (op.typing) {
        case Typing::Firing: return (fired & op.bit) != 0;
        case Typing::Activation: return (offered & op.bit) != 0;
        case Typing::Negative: return (offered & op.bit) == 0;
      }
      return false;
    case FK::Not:
      return !run_config(p, op.kids[0], fired, offered);
    case FK::And:
      for (auto k : op.kids)
        if (!run_config(p, k, fired, offered)) return false;
      return true;
    case FK::Or:
      for (auto k : op.kids)
        if (run_config(p, k, fired, offered)) return true;
      return false;
    case FK::Implies:
      return !run_config(p, op.kids[0], fired, offered) ||
             run_config(p, op.kids[1], fired, offered);
    case FK::Iff:
      return run_config(p, op.kids[0], fired, offered) ==
             run_config(p, op.kids[1], fired, offered);
  }
  return false;
}

}  // namespace

bool satisfies(const Interaction& a, const BoolFormula& f) {
  const PortIndex idx(port_union(ports_of(f), a.support()));
  const Program p = compile_formula(f, idx);
  return run(p, p.root, compile(a, idx), false);
}

bool holds_in_config(const BoolFormula& f, const PortSet& fired,
                     const PortSet& offered) {
  const PortIndex idx(port_union(ports_of(f), port_union(fired, offered)));
  const Program p = compile_formula(f, idx);
  const auto fm = idx.mask(fired);
  return run_config(p, p.root, fm, idx.mask(offered) | fm);
}

InteractionSet satisfying_set(const BoolFormula& f, const PortSet& universe,
                              const RulesOptions& opts) {
  const PortSet u = port_union(universe, ports_of(f));
  if (u.size() > opts.max_ports)
    throw SemanticError("satisfying set over " + std::to_string(u.size()) +
                        " ports exceeds the enumeration limit");
  const PortIndex idx(u);
  const Program p = compile_formula(f, idx);
  const std::size_t n = idx.size();
  std::set<Interaction> items;
  std::vector<unsigned> digit(n, 0);
  MaskedInteraction a;
  for (;;) {
    if (run(p, p.root, a, false)) items.insert(decompile(a, idx));
    std::size_t i = 0;
    for (; i < n; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      a.act &= ~bit;
      a.fire &= ~bit;
      a.neg &= ~bit;
      if (++digit[i] == 4) {
        digit[i] = 0;
        continue;
      }
      if (digit[i] == 1) a.act |= bit;
      if (digit[i] == 2) a.fire |= bit;
      if (digit[i] == 3) a.neg |= bit;
      break;
    }
    if (i == n) break;
  }
  return InteractionSet(std::move(items), u);
}

ConfigFilter hint_filter(const std::vector<BoolFormula>& hints,
                         const PortSet& universe) {
  if (hints.empty()) return {};
  const PortIndex idx(universe);
  auto prog = std::make_shared<Program>(compile_formula(BoolFormula::conj(hints), idx));
  return [prog](std::uint32_t fired, std::uint32_t offered) {
    return run_config(*prog, prog->root, fired, offered);
  };
}

// --- closing ------------------------------------------------------------------

namespace {

BoolFormula rewrite_negations(const BoolFormula& f) {
  if (f.kind() == FK::Not && f.args()[0].kind() == FK::Var) {
    const TypedPort& v = f.args()[0].variable();
    if (v.typing == Typing::Activation) return BoolFormula::var(neg(v.port));
    if (v.typing == Typing::Negative) return BoolFormula::var(act(v.port));
    return f;
  }
  switch (f.kind()) {
    case FK::Not:
      return BoolFormula::negation(rewrite_negations(f.args()[0]));
    case FK::And:
    case FK::Or: {
      std::vector<BoolFormula> xs;
      for (const auto& a : f.args()) xs.push_back(rewrite_negations(a));
      return f.kind() == FK::And ? BoolFormula::conj(xs) : BoolFormula::disj(xs);
    }
    case FK::Implies:
      return BoolFormula::implies(rewrite_negations(f.args()[0]),
                                  rewrite_negations(f.args()[1]));
    case FK::Iff:
      return BoolFormula::iff(rewrite_negations(f.args()[0]),
                              rewrite_negations(f.args()[1]));
    default:
      return f;
  }
}

}  // namespace

BoolFormula close_formula(const BoolFormula& f) {
  std::vector<BoolFormula> parts{rewrite_negations(f)};
  for (const auto& p : ports_of(f)) {
    parts.push_back(BoolFormula::implies(BoolFormula::var(fire(p)),
                                         BoolFormula::var(act(p))));
    parts.push_back(BoolFormula::negation(BoolFormula::conj(
        {BoolFormula::var(act(p)), BoolFormula::var(neg(p))})));
  }
  return BoolFormula::conj(std::move(parts));
}

BoolFormula progress_formula(const PortSet& ports) {
  std::vector<BoolFormula> vs;
  for (const auto& p : ports) vs.push_back(BoolFormula::var(fire(p)));
  return BoolFormula::disj(std::move(vs));
}

// --- rule systems -------------------------------------------------------------

namespace {

constexpr std::size_t kMaxMonomials = 4096;

// A literal; only firing variables occur negated.
struct Lit {
  TypedPort var;
  bool positive = true;
  friend auto operator<=>(const Lit&, const Lit&) = default;
  friend bool operator==(const Lit&, const Lit&) = default;
};
using Mono = std::set<Lit>;
using Dnf = std::set<Mono>;

// Canonical form; nullopt when contradictory.
std::optional<Mono> canonical(Mono m) {
  std::set<Port> fired, unfired, active, negative;
  for (const auto& l : m) {
    if (!l.positive) {
      unfired.insert(l.var.port);
    } else if (l.var.typing == Typing::Firing) {
      fired.insert(l.var.port);
    } else if (l.var.typing == Typing::Activation) {
      active.insert(l.var.port);
    } else {
      negative.insert(l.var.port);
    }
  }
  for (const auto& p : fired)
    if (unfired.contains(p) || negative.contains(p)) return std::nullopt;
  for (const auto& p : active)
    if (negative.contains(p)) return std::nullopt;
  for (const auto& p : fired) m.erase(Lit{act(p), true});
  return m;
}

Dnf absorb(const Dnf& d) {
  Dnf out;
  for (const auto& m : d) {
    const bool dominated = std::any_of(d.begin(), d.end(), [&](const Mono& o) {
      return o != m && std::includes(m.begin(), m.end(), o.begin(), o.end());
    });
    if (!dominated) out.insert(m);
  }
  return out;
}

void check_size(const Dnf& d) {
  if (d.size() > kMaxMonomials)
    throw SemanticError("formula expands to more than " +
                        std::to_string(kMaxMonomials) + " monomials");
}

Dnf product(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Mono m = x;
      m.insert(y.begin(), y.end());
      if (auto c = canonical(std::move(m))) out.insert(*c);
      if (out.size() > 4 * kMaxMonomials) check_size(out);
    }
  out = absorb(out);
  check_size(out);
  return out;
}

Dnf sum(Dnf a, const Dnf& b) {
  a.insert(b.begin(), b.end());
  a = absorb(a);
  check_size(a);
  return a;
}

Dnf dnf(const BoolFormula& f, bool neg);

Dnf dnf_and(const std::vector<BoolFormula>& xs, bool neg) {
  Dnf acc{Mono{}};
  for (const auto& x : xs) acc = product(acc, dnf(x, neg));
  return acc;
}

Dnf dnf_or(const std::vector<BoolFormula>& xs, bool neg) {
  Dnf acc;
  for (const auto& x : xs) acc = sum(acc, dnf(x, neg));
  return acc;
}

// Same reading of negation as `run`.
Dnf dnf(const BoolFormula& f, bool neg) {
  if (is_axiom(f)) return neg ? Dnf{} : Dnf{Mono{}};
  switch (f.kind()) {
    case FK::Const:
      return f.value() != neg ? Dnf{Mono{}} : Dnf{};
    case FK::Var: {
      const TypedPort& v = f.variable();
      if (!neg) return {Mono{Lit{v, true}}};
      switch (v.typing) {
        case Typing::Firing: return {Mono{Lit{v, false}}};
        case Typing::Activation: return {Mono{Lit{bipglue::neg(v.port), true}}};
        case Typing::Negative: return {Mono{Lit{act(v.port), true}}};
      }
      return {};
    }
    case FK::Not:
      return dnf(f.args()[0], !neg);
    case FK::And:
      return neg ? dnf_or(f.args(), true) : dnf_and(f.args(), false);
    case FK::Or:
      return neg ? dnf_and(f.args(), true) : dnf_or(f.args(), false);
    case FK::Implies: {
      const auto& a = f.args()[0];
      const auto& b = f.args()[1];
      if (neg) return product(dnf(a, false), dnf(b, true));
      return sum(dnf(a, true), dnf(b, false));
    }
    case FK::Iff: {
      const auto& a = f.args()[0];
      const auto& b = f.args()[1];
      if (neg)
        return sum(product(dnf(a, false), dnf(b, true)),
                   product(dnf(a, true), dnf(b, false)));
      return sum(product(dnf(a, false), dnf(b, false)),
                 product(dnf(a, true), dnf(b, true)));
    }
  }
  return {};
}

bool positive(const Dnf& d) {
  for (const auto& m : d)
    for (const auto& l : m)
      if (!l.positive) return false;
  return true;
}

CauseFormula to_cause(const Dnf& d) {
  std::set<Interaction> monos;
  for (const auto& m : d) {
    std::vector<TypedPort> tps;
    for (const auto& l : m) tps.push_back(l.var);
    if (auto a = Interaction::make(tps)) monos.insert(*a);
  }
  return CauseFormula(std::move(monos));
}

void flatten(const BoolFormula& f, std::vector<BoolFormula>& out) {
  switch (f.kind()) {
    case FK::And:
      for (const auto& a : f.args()) flatten(a, out);
      return;
    case FK::Iff:
      flatten(BoolFormula::implies(f.args()[0], f.args()[1]), out);
      flatten(BoolFormula::implies(f.args()[1], f.args()[0]), out);
      return;
    case FK::Const:
      if (f.value()) return;
      break;
    default:
      break;
  }
  out.push_back(f);
}

// --- hints ---

struct Horn {
  std::set<TypedPort> premise;
  TypedPort conclusion;
};

std::optional<std::vector<TypedPort>> conj_vars(const BoolFormula& f) {
  if (f.kind() == FK::Var) return std::vector<TypedPort>{f.variable()};
  if (f.kind() == FK::Const && f.value()) return std::vector<TypedPort>{};
  if (f.kind() != FK::And) return std::nullopt;
  std::vector<TypedPort> out;
  for (const auto& a : f.args()) {
    auto v = conj_vars(a);
    if (!v) return std::nullopt;
    out.insert(out.end(), v->begin(), v->end());
  }
  return out;
}

std::optional<TypedPort> complement(const TypedPort& v) {
  if (v.typing == Typing::Activation) return neg(v.port);
  if (v.typing == Typing::Negative) return act(v.port);
  return std::nullopt;
}

std::vector<Horn> horn_rules(const std::vector<BoolFormula>& hints) {
  std::vector<Horn> out;
  std::vector<BoolFormula> clauses;
  for (const auto& h : hints) flatten(rewrite_negations(h), clauses);
  for (const auto& c : clauses) {
    if (c.kind() != FK::Implies) continue;
    auto pre = conj_vars(c.args()[0]);
    auto con = conj_vars(c.args()[1]);
    if (!pre || !con) continue;
    const std::set<TypedPort> p(pre->begin(), pre->end());
    for (const auto& y : *con) {
      out.push_back({p, y});
      const auto ny = complement(y);
      if (!ny) continue;
      // Contrapositive: the other premises and ~y give ~x.
      for (const auto& x : p) {
        const auto nx = complement(x);
        if (!nx) continue;
        auto q = p;
        q.erase(x);
        q.insert(*ny);
        out.push_back({q, *nx});
      }
    }
  }
  return out;
}

std::set<TypedPort> closure(const std::set<TypedPort>& lits,
                            const std::vector<Horn>& rules) {
  std::set<TypedPort> c = lits;
  for (const auto& l : lits)
    if (l.typing == Typing::Firing) c.insert(act(l.port));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& r : rules) {
      if (c.contains(r.conclusion)) continue;
      if (!std::includes(c.begin(), c.end(), r.premise.begin(), r.premise.end()))
        continue;
      c.insert(r.conclusion);
      if (r.conclusion.typing == Typing::Firing) c.insert(act(r.conclusion.port));
      grew = true;
    }
  }
  return c;
}

Interaction eliminate(const Interaction& m, const std::vector<Horn>& rules) {
  auto lits = m.typed_ports();
  std::set<TypedPort> cur(lits.begin(), lits.end());
  for (const auto& l : lits) {
    if (l.typing == Typing::Firing) continue;
    auto rest = cur;
    rest.erase(l);
    if (closure(rest, rules).contains(l)) cur = rest;
  }
  return *Interaction::make(std::vector<TypedPort>(cur.begin(), cur.end()));
}

// --- per-system simplification ---

using RuleMap = std::map<Effect, CauseFormula>;

bool simplify_step(RuleMap& rules) {
  bool changed = false;
  auto replace = [&](CauseFormula& c, std::set<Interaction> monos) {
    CauseFormula next = absorbed(CauseFormula(std::move(monos)));
    if (next != c) {
      c = std::move(next);
      changed = true;
    }
  };
  // Literals every tt monomial shares hold in every model.
  const auto& tt = rules.at(std::nullopt).monomials();
  std::optional<Interaction> forced;
  for (const auto& m : tt) {
    if (!forced) {
      forced = m;
      continue;
    }
    PortSet f, a, n;
    std::set_intersection(forced->fire().begin(), forced->fire().end(),
                          m.fire().begin(), m.fire().end(), std::inserter(f, f.end()));
    const PortSet fa = port_union(forced->act(), forced->fire());
    const PortSet ma = port_union(m.act(), m.fire());
    std::set_intersection(fa.begin(), fa.end(), ma.begin(), ma.end(),
                          std::inserter(a, a.end()));
    std::set_intersection(forced->neg().begin(), forced->neg().end(),
                          m.neg().begin(), m.neg().end(), std::inserter(n, n.end()));
    forced = *Interaction::make(f, a, n);
  }
  // A port that is never offered never fires.
  if (forced)
    for (const auto& p : forced->neg()) {
      auto& c = rules.at(fire(p));
      if (!c.is_ff()) {
        c = CauseFormula::ff();
        changed = true;
      }
    }
  for (auto& [e, c] : rules) {
    std::set<Interaction> keep;
    for (const auto& m : c.monomials()) {
      if (forced && !merge(m, *forced)) continue;
      bool dead = false;
      for (const auto& p : m.fire()) {
        auto it = rules.find(fire(p));
        dead = dead || (it != rules.end() && it->second.is_ff());
      }
      if (dead) continue;
      if (e) {
        const Port& p = e->port;
        if (m.neg().contains(p)) continue;
        auto f = m.fire(), a = m.act();
        f.erase(p);
        a.erase(p);
        keep.insert(*Interaction::make(f, a, m.neg()));
      } else {
        keep.insert(m);
      }
    }
    replace(c, std::move(keep));
  }
  return changed;
}

}  // namespace

std::vector<CausalRuleSystem> to_rule_systems(const BoolFormula& f,
                                              const std::vector<BoolFormula>& hints,
                                              const SynthesisOptions& opts) {
  std::vector<BoolFormula> all{f};
  all.insert(all.end(), hints.begin(), hints.end());
  const BoolFormula phi = BoolFormula::conj(all);
  const PortSet universe = ports_of(phi);

  std::vector<BoolFormula> clauses;
  flatten(phi, clauses);
  std::map<Port, std::vector<BoolFormula>> grouped;
  std::vector<Dnf> tt_parts, offenders;
  for (const auto& c : clauses) {
    if (is_axiom(c)) continue;
    if (c.kind() == FK::Implies && c.args()[0].kind() == FK::Var &&
        c.args()[0].variable().typing == Typing::Firing) {
      grouped[c.args()[0].variable().port].push_back(c.args()[1]);
      continue;
    }
    // Clauses led by an offer literal are split on, like negative ones.
    const bool offer_led = c.kind() == FK::Implies && c.args()[0].kind() == FK::Var;
    Dnf d = dnf(c, false);
    (positive(d) && !offer_led ? tt_parts : offenders).push_back(std::move(d));
  }
  std::map<Port, Dnf> causes;
  for (const auto& [p, rhs] : grouped) {
    Dnf d = dnf(BoolFormula::conj(rhs), false);
    if (positive(d)) {
      causes.emplace(p, std::move(d));
    } else {
      offenders.push_back(sum(Dnf{Mono{Lit{fire(p), false}}}, d));
    }
  }
  Dnf tt{Mono{}};
  for (const auto& d : tt_parts) tt = product(tt, d);

  std::size_t combos = 1;
  for (const auto& o : offenders) {
    if (o.empty()) return {};
    if (o.size() > opts.max_splits || combos * o.size() > opts.max_splits)
      throw SemanticError("case splitting needs more than " +
                          std::to_string(opts.max_splits) + " rule systems");
    combos *= o.size();
  }

  const auto horn = horn_rules(hints);
  std::vector<CausalRuleSystem> out;
  std::vector<std::vector<Mono>> choices;
  for (const auto& o : offenders) choices.emplace_back(o.begin(), o.end());
  for (std::size_t k = 0; k < combos; ++k) {
    Mono chosen;
    std::size_t rest = k;
    for (const auto& ch : choices) {
      const auto& m = ch[rest % ch.size()];
      rest /= ch.size();
      chosen.insert(m.begin(), m.end());
    }
    auto cm = canonical(chosen);
    if (!cm) continue;
    Mono facts;
    std::set<Port> banned;
    for (const auto& l : *cm) {
      if (l.positive) {
        facts.insert(l);
      } else {
        banned.insert(l.var.port);
      }
    }
    RuleMap rules;
    rules.emplace(std::nullopt, to_cause(product(tt, Dnf{facts})));
    for (const auto& p : universe) {
      CauseFormula c = CauseFormula::tt();
      if (banned.contains(p)) {
        c = CauseFormula::ff();
      } else if (auto it = causes.find(p); it != causes.end()) {
        c = to_cause(it->second);
      }
      rules.emplace(fire(p), c);
    }
    while (simplify_step(rules)) {
    }
    if (rules.at(std::nullopt).is_ff()) continue;
    if (!horn.empty()) {
      // Rules edited earlier feed later eliminations, never their own.
      for (auto& [e, c] : rules) {
        auto local = horn;
        for (const auto& [f, d] : rules) {
          // A single-monomial cause holds whenever its effect fires.
          if (!f || f == e || d.monomials().size() != 1) continue;
          for (const auto& l : d.monomials().begin()->typed_ports())
            local.push_back({{*f}, l});
        }
        std::set<Interaction> monos;
        for (const auto& m : c.monomials()) monos.insert(eliminate(m, local));
        c = absorbed(CauseFormula(std::move(monos)));
      }
    }
    CausalRuleSystem sys(universe, RuleMode::FiringOnly, rules);
    if (universe.size() <= opts.rules.max_ports) {
      if (eval_rules(sys, opts.rules).empty()) continue;
      sys = reduce_rules(sys, opts.rules);
    }
    if (std::find(out.begin(), out.end(), sys) == out.end()) out.push_back(sys);
  }
  return out;
}

// --- constraint files and the pipeline ----------------------------------------

Constraints parse_constraints(std::string_view text, PortLexing mode) {
  Constraints out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t offset = start;
    bool hint = false;
    const auto b = line.find_first_not_of(" \t\r");
    if (b != std::string_view::npos && line.substr(b).starts_with("hint:")) {
      hint = true;
      offset += b + 5;
      line = line.substr(b + 5);
    }
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        auto f = parse_formula(line, mode);
        (hint ? out.hints : out.formulas).push_back(std::move(f));
      } catch (const ParseError& err) {
        throw ParseError(err.message(), offset + err.position());
      }
    }
    start = end + 1;
  }
  return out;
}

PortSet ports_of(const Constraints& c) {
  PortSet out;
  for (const auto& f : c.formulas) out = port_union(out, ports_of(f));
  for (const auto& f : c.hints) out = port_union(out, ports_of(f));
  return out;
}

Synthesis synthesize(const Constraints& c, bool progress,
                     const SynthesisOptions& opts) {
  std::vector<BoolFormula> fs = c.formulas;
  if (progress) fs.push_back(progress_formula(ports_of(c)));
  const BoolFormula phi = BoolFormula::conj(fs);

  Synthesis out;
  std::vector<BoolFormula> with_hints = fs;
  with_hints.insert(with_hints.end(), c.hints.begin(), c.hints.end());
  out.formula = close_formula(BoolFormula::conj(with_hints));
  out.systems = to_rule_systems(phi, c.hints, opts);

  TreeOfRulesOptions topts;
  topts.rules = opts.rules;
  topts.check_max_ports = opts.rules.max_ports;
  const std::size_t n = out.systems.size();
  out.trees.resize(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out.trees[i] = tree_of_rules(out.systems[i], topts);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& t : out.trees) out.connectors.push_back(sigma(t));
  return out;
}

std::vector<ConnectorTerm> synthesize(const BoolFormula& f,
                                      const SynthesisOptions& opts) {
  return synthesize(Constraints{{f}, {}}, false, opts).connectors;
}

}  // namespace bipglue
