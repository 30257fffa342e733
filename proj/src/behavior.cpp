#include "bipglue/behavior.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <tuple>

#include "bipglue/error.hpp"

namespace bipglue {

Lts::Lts(std::vector<std::string> states, std::string initial, PortSet ports,
         std::vector<Transition> transitions)
    : states_(std::move(states)),
      initial_(std::move(initial)),
      ports_(std::move(ports)) {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (!index_.emplace(states_[i], i).second)
      throw SemanticError("duplicate state '" + states_[i] + "'");
  }
  if (!has_state(initial_))
    throw SemanticError("unknown initial state '" + initial_ + "'");
  for (auto& t : transitions) {
    if (!has_state(t.from) || !has_state(t.to))
      throw SemanticError("transition mentions an unknown state");
    if (t.label.empty())
      throw SemanticError("transition labels must be non-empty");
    if (!is_subset(t.label, ports_))
      throw SemanticError("transition label uses an unknown port");
    transitions_.insert(std::move(t));
  }
}

std::size_t Lts::index(const std::string& q) const {
  auto it = index_.find(q);
  if (it == index_.end()) throw SemanticError("unknown state '" + q + "'");
  return it->second;
}

Behaviour::Behaviour(Lts lts, std::map<std::string, PortSet> offers)
    : lts_(std::move(lts)), offers_(std::move(offers)) {
  for (const auto& [q, ps] : offers_) {
    if (!lts_.has_state(q))
      throw SemanticError("offer for unknown state '" + q + "'");
    if (!is_subset(ps, lts_.ports()))
      throw SemanticError("offer of unknown port at state '" + q + "'");
  }
  for (const auto& q : lts_.states()) offers_[q];
  for (const auto& t : lts_.transitions()) {
    if (!is_subset(t.label, offers_[t.from]))
      throw SemanticError("offer predicate at state '" + t.from +
                          "' does not cover its enabled ports");
  }
}

const PortSet& Behaviour::offers(const std::string& q) const {
  auto it = offers_.find(q);
  if (it == offers_.end()) throw SemanticError("unknown state '" + q + "'");
  return it->second;
}

Behaviour offer_closure(const Lts& lts, const OfferPairs& extra) {
  std::map<std::string, PortSet> offers;
  for (const auto& t : lts.transitions())
    offers[t.from].insert(t.label.begin(), t.label.end());
  for (const auto& [q, p] : extra) {
    if (!lts.has_state(q))
      throw SemanticError("offer for unknown state '" + q + "'");
    if (!lts.ports().contains(p))
      throw SemanticError("offer of unknown port '" + p.name() + "'");
    offers[q].insert(p);
  }
  return Behaviour(lts, std::move(offers));
}

OfferPairs extra_offers(const Behaviour& b) {
  std::map<std::string, PortSet> mandated;
  for (const auto& t : b.lts().transitions())
    mandated[t.from].insert(t.label.begin(), t.label.end());
  OfferPairs out;
  for (const auto& [q, ps] : b.offer_map())
    for (const auto& p : ps)
      if (!mandated[q].contains(p)) out.emplace(q, p);
  return out;
}

namespace {

struct Premise {
  PortSet fire, act, neg;
};

Behaviour compose_core(const std::vector<Premise>& gamma,
                       const PortSet& mentioned,
                       const std::vector<Behaviour>& comps) {
  PortSet all;
  for (const auto& c : comps) {
    for (const auto& p : c.ports())
      if (!all.insert(p).second)
        throw SemanticError("components share port '" + p.name() + "'");
  }
  if (!is_subset(mentioned, all))
    throw SemanticError("glue mentions a port outside the components");

  const std::size_t k = comps.size();
  // Per-component successor tables: state index -> label -> targets.
  std::vector<std::vector<std::map<PortSet, std::vector<std::size_t>>>> succ(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& lts = comps[i].lts();
    succ[i].resize(lts.states().size());
    for (const auto& t : lts.transitions())
      succ[i][lts.index(t.from)][t.label].push_back(lts.index(t.to));
  }

  using Tuple = std::vector<std::size_t>;
  auto name = [&](const Tuple& s) {
    std::string out;
    for (std::size_t i = 0; i < k; ++i) {
      if (i) out += ',';
      out += comps[i].lts().states()[s[i]];
    }
    return out;
  };

  Tuple init(k);
  for (std::size_t i = 0; i < k; ++i)
    init[i] = comps[i].lts().index(comps[i].initial());

  std::map<Tuple, std::string> seen{{init, name(init)}};
  std::vector<std::string> order{name(init)};
  std::deque<Tuple> work{init};
  std::vector<Transition> transitions;
  std::map<std::string, PortSet> offers;

  while (!work.empty()) {
    const Tuple s = work.front();
    work.pop_front();
    const std::string from = seen[s];
    auto& off = offers[from];
    for (std::size_t i = 0; i < k; ++i) {
      const auto& o = comps[i].offers(comps[i].lts().states()[s[i]]);
      off.insert(o.begin(), o.end());
    }
    for (const auto& a : gamma) {
      if (a.fire.empty()) continue;
      std::vector<std::vector<std::size_t>> choices(k);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const auto& ports = comps[i].ports();
        const auto& here = comps[i].offers(comps[i].lts().states()[s[i]]);
        PortSet f;
        for (const auto& p : a.fire)
          if (ports.contains(p)) f.insert(p);
        for (const auto& p : a.act)
          if (ports.contains(p) && !here.contains(p)) ok = false;
        for (const auto& p : a.neg)
          if (ports.contains(p) && here.contains(p)) ok = false;
        if (!ok) break;
        if (f.empty()) {
          choices[i] = {s[i]};
        } else {
          auto it = succ[i][s[i]].find(f);
          if (it == succ[i][s[i]].end()) {
            ok = false;
          } else {
            choices[i] = it->second;
          }
        }
      }
      if (!ok) continue;
      Tuple t(k);
      std::function<void(std::size_t)> expand = [&](std::size_t i) {
        if (i == k) {
          auto [it, fresh] = seen.emplace(t, name(t));
          if (fresh) {
            order.push_back(it->second);
            work.push_back(t);
          }
          transitions.push_back({from, a.fire, it->second});
          return;
        }
        for (auto c : choices[i]) {
          t[i] = c;
          expand(i + 1);
        }
      };
      expand(0);
    }
  }
  Lts lts(order, order.front(), all, std::move(transitions));
  return Behaviour(std::move(lts), std::move(offers));
}

PortSet mentioned_ports(const std::vector<Premise>& gamma) {
  PortSet out;
  for (const auto& a : gamma) {
    out.insert(a.fire.begin(), a.fire.end());
    out.insert(a.act.begin(), a.act.end());
    out.insert(a.neg.begin(), a.neg.end());
  }
  return out;
}

Behaviour filter_transitions(
    const Behaviour& b, const std::function<bool(const Transition&)>& keep) {
  std::vector<Transition> kept;
  for (const auto& t : b.lts().transitions())
    if (keep(t)) kept.push_back(t);
  Lts lts(b.lts().states(), b.initial(), b.ports(), std::move(kept));
  return Behaviour(std::move(lts), b.offer_map());
}

}  // namespace

Behaviour compose_extended(const InteractionSet& gamma,
                           const std::vector<Behaviour>& comps) {
  std::vector<Premise> premises;
  for (const auto& a : gamma) premises.push_back({a.fire(), a.act(), a.neg()});
  return compose_core(premises, mentioned_ports(premises), comps);
}

Behaviour compose_classical(const PlainGlue& gamma,
                            const std::vector<Behaviour>& comps) {
  std::vector<Premise> premises;
  for (const auto& a : gamma) premises.push_back({a, {}, {}});
  return compose_core(premises, mentioned_ports(premises), comps);
}

Behaviour restrict_priority_classical(const Behaviour& b,
                                      const PriorityModel& prec) {
  std::map<std::string, std::set<PortSet>> enabled;
  for (const auto& t : b.lts().transitions()) enabled[t.from].insert(t.label);
  return filter_transitions(b, [&](const Transition& t) {
    for (const auto& hi : prec.above(t.label))
      if (enabled[t.from].contains(hi)) return false;
    return true;
  });
}

Behaviour restrict_priority_offer(const Behaviour& b,
                                  const PriorityModel& prec) {
  return filter_transitions(b, [&](const Transition& t) {
    for (const auto& hi : prec.above(t.label))
      if (is_subset(hi, b.offers(t.from))) return false;
    return true;
  });
}

Behaviour reachable_part(const Behaviour& b) {
  std::map<std::string, std::vector<const Transition*>> out;
  for (const auto& t : b.lts().transitions()) out[t.from].push_back(&t);
  std::set<std::string> seen{b.initial()};
  std::vector<std::string> order{b.initial()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto* t : out[order[i]])
      if (seen.insert(t->to).second) order.push_back(t->to);
  }
  std::vector<Transition> kept;
  std::map<std::string, PortSet> offers;
  for (const auto& q : order) {
    offers[q] = b.offers(q);
    for (const auto* t : out[q]) kept.push_back(*t);
  }
  Lts lts(order, b.initial(), b.ports(), std::move(kept));
  return Behaviour(std::move(lts), std::move(offers));
}

namespace {

struct Graph {
  std::size_t n = 0;
  std::size_t initial = 0;
  std::vector<int> offer;  // shared offer-set ids
  std::vector<std::vector<std::pair<int, std::size_t>>> out, in;
  std::set<std::tuple<std::size_t, int, std::size_t>> edges;
};

Graph index_graph(const Behaviour& b, std::map<PortSet, int>& labels,
                  std::map<PortSet, int>& offer_ids) {
  const auto& lts = b.lts();
  Graph g;
  g.n = lts.states().size();
  g.initial = lts.index(lts.initial());
  g.out.resize(g.n);
  g.in.resize(g.n);
  for (const auto& q : lts.states()) {
    auto [it, _] = offer_ids.emplace(b.offers(q), offer_ids.size());
    g.offer.push_back(it->second);
  }
  for (const auto& t : lts.transitions()) {
    auto [it, _] = labels.emplace(t.label, labels.size());
    const auto u = lts.index(t.from), v = lts.index(t.to);
    g.out[u].emplace_back(it->second, v);
    g.in[v].emplace_back(it->second, u);
    g.edges.emplace(u, it->second, v);
  }
  return g;
}

// Colour refinement run jointly on both graphs so colour ids are comparable.
void refine(const Graph& a, const Graph& b, std::vector<int>& ca,
            std::vector<int>& cb) {
  using Sig = std::tuple<int, std::vector<std::pair<int, int>>,
                         std::vector<std::pair<int, int>>>;
  auto initial = [](const Graph& g, std::vector<int>& c) {
    c.resize(g.n);
    for (std::size_t q = 0; q < g.n; ++q)
      c[q] = g.offer[q] * 2 + (q == g.initial ? 1 : 0);
  };
  initial(a, ca);
  initial(b, cb);
  std::size_t classes = 0;
  for (;;) {
    std::map<Sig, int> ids;
    auto step = [&](const Graph& g, const std::vector<int>& c) {
      std::vector<int> next(g.n);
      for (std::size_t q = 0; q < g.n; ++q) {
        Sig s;
        std::get<0>(s) = c[q];
        for (auto [l, v] : g.out[q]) std::get<1>(s).emplace_back(l, c[v]);
        for (auto [l, u] : g.in[q]) std::get<2>(s).emplace_back(l, c[u]);
        std::sort(std::get<1>(s).begin(), std::get<1>(s).end());
        std::sort(std::get<2>(s).begin(), std::get<2>(s).end());
        auto [it, _] = ids.emplace(std::move(s), ids.size());
        next[q] = it->second;
      }
      return next;
    };
    auto na = step(a, ca);
    auto nb = step(b, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (ids.size() == classes) return;
    classes = ids.size();
  }
}

}  // namespace

bool behaviour_equal(const Behaviour& x, const Behaviour& y) {
  if (x.ports() != y.ports()) return false;
  const auto rx = reachable_part(x);
  const auto ry = reachable_part(y);
  std::map<PortSet, int> labels, offer_ids;
  const Graph a = index_graph(rx, labels, offer_ids);
  const Graph b = index_graph(ry, labels, offer_ids);
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;

  std::vector<int> ca, cb;
  refine(a, b, ca, cb);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  if (ca[a.initial] != cb[b.initial]) return false;

  // States of a in reachability order; states are indexed in BFS order by
  // reachable_part already.
  std::vector<long> map(a.n, -1);
  std::vector<char> used(b.n, 0);
  auto consistent = [&](std::size_t q) {
    for (auto [l, v] : a.out[q])
      if (map[v] >= 0 &&
          !b.edges.contains({static_cast<std::size_t>(map[q]), l,
                             static_cast<std::size_t>(map[v])}))
        return false;
    for (auto [l, u] : a.in[q])
      if (map[u] >= 0 &&
          !b.edges.contains({static_cast<std::size_t>(map[u]), l,
                             static_cast<std::size_t>(map[q])}))
        return false;
    return true;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t q) -> bool {
    if (q == a.n) return true;
    for (std::size_t c = 0; c < b.n; ++c) {
      if (used[c] || cb[c] != ca[q]) continue;
      if (q == a.initial && c != b.initial) continue;
      map[q] = static_cast<long>(c);
      used[c] = 1;
      if (consistent(q) && assign(q + 1)) return true;
      used[c] = 0;
      map[q] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace bipglue
