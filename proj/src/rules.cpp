#include "bipglue/rules.hpp"

#include <algorithm>
#include <functional>

#include "bipglue/error.hpp"
#include "bipglue/kernels.hpp"
#include "bipglue/masks.hpp"

namespace bipglue {

std::string to_string(const Effect& e) { return e ? to_string(*e) : "tt"; }

CauseFormula::CauseFormula(std::set<Interaction> monomials)
    : monos_(std::move(monomials)) {}

PortSet CauseFormula::ports() const {
  PortSet out;
  for (const auto& m : monos_) {
    const auto s = m.support();
    out.insert(s.begin(), s.end());
  }
  return out;
}

CauseFormula disjoin(const CauseFormula& a, const CauseFormula& b) {
  auto m = a.monomials();
  m.insert(b.monomials().begin(), b.monomials().end());
  return CauseFormula(std::move(m));
}

CauseFormula conjoin(const CauseFormula& a, const CauseFormula& b) {
  std::set<Interaction> out;
  for (const auto& x : a.monomials())
    for (const auto& y : b.monomials())
      if (auto m = merge(x, y)) out.insert(*m);
  return CauseFormula(std::move(out));
}

CauseFormula absorbed(const CauseFormula& f) {
  std::set<Interaction> out;
  for (const auto& m : f.monomials()) {
    const bool dominated = std::any_of(
        f.monomials().begin(), f.monomials().end(),
        [&](const Interaction& o) { return o != m && o.below(m); });
    if (!dominated) out.insert(m);
  }
  return CauseFormula(std::move(out));
}

std::string to_string(const CauseFormula& f) {
  if (f.is_ff()) return "ff";
  if (f.is_tt()) return "tt";
  std::string s;
  for (const auto& m : f.monomials()) {
    if (!s.empty()) s += " | ";
    s += to_string(m);
  }
  return s;
}

// --- systems ------------------------------------------------------------------

std::vector<Effect> effect_universe(const PortSet& universe, RuleMode mode) {
  std::vector<Effect> out{std::nullopt};
  for (const auto& p : universe) {
    if (mode == RuleMode::Full) out.push_back(act(p));
    out.push_back(fire(p));
    if (mode == RuleMode::Full) out.push_back(neg(p));
  }
  return out;
}

CausalRuleSystem::CausalRuleSystem(PortSet universe, RuleMode mode,
                                   std::map<Effect, CauseFormula> rules)
    : universe_(std::move(universe)), mode_(mode) {
  for (const auto& [e, c] : rules) {
    if (e) {
      if (!universe_.contains(e->port))
        throw SemanticError("rule effect " + to_string(e) + " outside the universe");
      if (mode_ == RuleMode::FiringOnly && e->typing != Typing::Firing)
        throw SemanticError("firing-only system with effect " + to_string(e));
      if (c.ports().contains(e->port))
        throw SemanticError("cause of " + to_string(e) + " mentions its own port");
    }
    for (const auto& p : c.ports())
      if (!universe_.contains(p))
        throw SemanticError("cause mentions " + p.name() + " outside the universe");
  }
  for (const auto& e : effect_universe(universe_, mode_)) {
    auto it = rules.find(e);
    if (it != rules.end()) {
      rules_.emplace(e, it->second);
    } else {
      rules_.emplace(e, e ? CauseFormula::ff() : CauseFormula::tt());
    }
  }
}

const CauseFormula& CausalRuleSystem::cause(const Effect& e) const {
  auto it = rules_.find(e);
  if (it == rules_.end())
    throw SemanticError("no rule for effect " + to_string(e));
  return it->second;
}

// --- trees to rules -----------------------------------------------------------

namespace {

bool holds(const Interaction& a, const Effect& e) {
  if (!e) return true;
  switch (e->typing) {
    case Typing::Firing:
      return a.fire().contains(e->port);
    case Typing::Activation:
      return a.fire().contains(e->port) || a.act().contains(e->port);
    case Typing::Negative:
      return a.neg().contains(e->port);
  }
  return false;
}

Interaction without_port(const Interaction& a, const Port& p) {
  auto f = a.fire(), ac = a.act(), n = a.neg();
  f.erase(p);
  ac.erase(p);
  n.erase(p);
  return *Interaction::make(f, ac, n);
}

void collect_causes(const std::vector<Node>& f, const Interaction& prefix,
                    const Effect& e, std::set<Interaction>& out) {
  for (const auto& n : f) {
    const auto a = n.label.interaction();
    if (!a) continue;
    const auto m = merge(prefix, *a);
    if (!m) continue;
    if (holds(*a, e)) {
      out.insert(e ? without_port(*m, e->port) : *m);
    } else {
      collect_causes(n.children, *m, e, out);
    }
  }
}

}  // namespace

CauseFormula cause_of(const CausalTree& t, const Effect& e) {
  std::set<Interaction> out;
  collect_causes(t.roots, Interaction{}, e, out);
  return absorbed(CauseFormula(std::move(out)));
}

CausalRuleSystem rules_of_tree(const CausalTree& t, RuleMode mode,
                               std::optional<PortSet> universe) {
  PortSet u = port_union(ports_of(t), universe.value_or(PortSet{}));
  std::map<Effect, CauseFormula> rules;
  for (const auto& e : effect_universe(u, mode)) rules.emplace(e, cause_of(t, e));
  return CausalRuleSystem(std::move(u), mode, std::move(rules));
}

// --- semantics ----------------------------------------------------------------

namespace {

std::vector<kernels::CompiledRule> compile_rules(const CausalRuleSystem& r,
                                                 const PortIndex& idx) {
  using E = kernels::CompiledRule::Effect;
  std::vector<kernels::CompiledRule> out;
  for (const auto& [e, c] : r.rules()) {
    if (e && c.is_tt()) continue;
    kernels::CompiledRule cr;
    if (e) {
      cr.effect = e->typing == Typing::Firing       ? E::Fire
                  : e->typing == Typing::Activation ? E::Act
                                                    : E::Neg;
      cr.port = idx.index(e->port);
    }
    for (const auto& m : c.monomials()) cr.cause.push_back(compile(m, idx));
    out.push_back(std::move(cr));
  }
  return out;
}

void check_size(const CausalRuleSystem& r, const RulesOptions& opts) {
  if (r.universe().size() > opts.max_ports)
    throw SemanticError("rule system over " + std::to_string(r.universe().size()) +
                        " ports exceeds the enumeration limit of " +
                        std::to_string(opts.max_ports));
}

std::vector<MaskedInteraction> models(const CausalRuleSystem& r,
                                      const PortIndex& idx,
                                      const RulesOptions& opts) {
  const auto compiled = compile_rules(r, idx);
  return kernels::enumerate_models(compiled, idx.size(), opts.execution);
}

}  // namespace

InteractionSet eval_rules(const CausalRuleSystem& r, const RulesOptions& opts) {
  check_size(r, opts);
  const PortIndex idx(r.universe());
  std::set<Interaction> items;
  for (const auto& m : models(r, idx, opts)) items.insert(decompile(m, idx));
  return InteractionSet(std::move(items), r.universe());
}

CausalRuleSystem simplify_rules(const CausalRuleSystem& r) {
  std::map<Effect, CauseFormula> rules;
  for (const auto& [e, c] : r.rules()) rules.emplace(e, absorbed(c));
  return CausalRuleSystem(r.universe(), r.mode(), std::move(rules));
}

CausalRuleSystem reduce_rules(const CausalRuleSystem& r,
                              const RulesOptions& opts) {
  check_size(r, opts);
  const PortIndex idx(r.universe());
  const auto target = models(r, idx, opts);
  std::map<Effect, CauseFormula> rules;
  for (const auto& [e, c] : r.rules()) rules.emplace(e, absorbed(c));
  auto same = [&](const std::map<Effect, CauseFormula>& cand) {
    return models(CausalRuleSystem(r.universe(), r.mode(), cand), idx, opts) ==
           target;
  };
  // Port rules first so that the tt rule keeps the context they rely on.
  std::vector<Effect> order;
  for (const auto& [e, c] : rules)
    if (e) order.push_back(e);
  order.push_back(std::nullopt);
  for (const auto& e : order) {
    CauseFormula& cause = rules.at(e);
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<Interaction> monos(cause.monomials().begin(),
                                           cause.monomials().end());
      for (const auto& m : monos) {
        // Dropping the monomial strengthens; dropping a literal weakens.
        std::vector<CauseFormula> tries;
        auto rest = cause.monomials();
        rest.erase(m);
        tries.emplace_back(rest);
        for (const auto& tp : m.typed_ports()) {
          std::vector<TypedPort> lits;
          for (const auto& o : m.typed_ports())
            if (o != tp) lits.push_back(o);
          auto alt = rest;
          alt.insert(*Interaction::make(lits));
          tries.push_back(absorbed(CauseFormula(alt)));
        }
        for (auto& cand : tries) {
          const CauseFormula saved = cause;
          cause = cand;
          if (same(rules)) {
            changed = true;
            break;
          }
          cause = saved;
        }
        if (changed) break;
      }
    }
  }
  return CausalRuleSystem(r.universe(), r.mode(), std::move(rules));
}

// --- rules to trees -----------------------------------------------------------

CausalTree tree_of_rules(const CausalRuleSystem& r,
                         const TreeOfRulesOptions& opts) {
  const InteractionSet sem = eval_rules(r, opts.rules);
  const InteractionSet n = normalize_interaction_set(sem);
  std::vector<Interaction> xs(n.begin(), n.end());
  std::stable_sort(xs.begin(), xs.end(), [](const Interaction& a, const Interaction& b) {
    return a.size() < b.size();
  });
  auto proper_below = [](const Interaction& y, const Interaction& x) {
    return y != x && y.below(x);
  };
  // Generators: elements that are not the union of the elements below them.
  std::vector<Interaction> gens;
  for (const auto& x : xs) {
    Interaction u;
    bool any = false;
    for (const auto& y : xs) {
      if (!proper_below(y, x)) continue;
      u = *merge(u, y);
      any = true;
    }
    if (!any || u != x) gens.push_back(x);
  }
  // Each generator hangs below its largest proper sub-generator.
  std::vector<std::vector<std::size_t>> kids(gens.size());
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::optional<std::size_t> parent;
    for (std::size_t j = 0; j < i; ++j)
      if (proper_below(gens[j], gens[i]) &&
          (!parent || gens[j].size() > gens[*parent].size()))
        parent = j;
    (parent ? kids[*parent] : roots).push_back(i);
  }
  std::function<Node(std::size_t, const Interaction&)> build =
      [&](std::size_t i, const Interaction& above) {
        Node nd{Label::of(difference(gens[i], above)), {}};
        for (auto k : kids[i]) nd.children.push_back(build(k, gens[i]));
        return nd;
      };
  CausalTree t;
  for (auto i : roots) t.roots.push_back(build(i, Interaction{}));
  t = normalize_tree(t);

  if (r.universe().size() <= opts.check_max_ports) {
    const auto got = eval_tree(t).widened(r.universe());
    if (!equiv_offer(got, sem, {opts.check_max_ports, opts.rules.execution, {}}))
      throw ContractViolation("tree_of_rules: result is not offer-equivalent to |R|");
  }
  return t;
}

// --- text ---------------------------------------------------------------------

namespace {

CauseFormula parse_cause(TokenStream& ts) {
  std::set<Interaction> monos;
  do {
    if (ts.accept(Tok::True) || ts.accept(Tok::One)) {
      monos.insert(Interaction{});
      continue;
    }
    if (ts.accept(Tok::False) || ts.accept(Tok::Zero)) continue;
    std::vector<TypedPort> lits;
    while (ts.at_typed_port()) lits.push_back(*ts.typed_port());
    if (lits.empty())
      ts.fail("expected a monomial, found " + describe(ts.peek().kind));
    if (auto m = Interaction::make(lits)) monos.insert(*m);
  } while (ts.accept(Tok::Bar));
  return CauseFormula(std::move(monos));
}

}  // namespace

CausalRuleSystem parse_rules(std::string_view text, PortLexing mode,
                             std::optional<PortSet> universe) {
  std::map<Effect, CauseFormula> rules;
  PortSet u = universe.value_or(PortSet{});
  bool full = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        TokenStream ts(line, mode);
        Effect e;
        if (!ts.accept(Tok::True)) {
          e = ts.typed_port();
          if (!e) ts.fail("expected an effect, found " + describe(ts.peek().kind));
          u.insert(e->port);
          full = full || e->typing != Typing::Firing;
        }
        ts.expect(Tok::Implies);
        CauseFormula c = parse_cause(ts);
        ts.expect_end();
        for (const auto& p : c.ports()) u.insert(p);
        auto [it, fresh] = rules.emplace(e, c);
        if (!fresh) it->second = disjoin(it->second, c);
      } catch (const ParseError& err) {
        throw ParseError(err.message(), start + err.position());
      }
    }
    start = end + 1;
  }
  return CausalRuleSystem(std::move(u), full ? RuleMode::Full : RuleMode::FiringOnly,
                          std::move(rules));
}

std::string to_string(const CausalRuleSystem& r) {
  std::string out;
  for (const auto& [e, c] : r.rules())
    out += to_string(e) + " => " + to_string(c) + "\n";
  return out;
}

}  // namespace bipglue
