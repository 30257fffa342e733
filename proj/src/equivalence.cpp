#include "bipglue/equivalence.hpp"

#include <algorithm>
#include <map>

#include "bipglue/error.hpp"

namespace bipglue {

namespace {

void require_same_universe(const InteractionSet& a, const InteractionSet& b) {
  if (a.universe() != b.universe())
    throw SemanticError("interaction sets have different port universes");
}

void require_cap(const InteractionSet& s, std::size_t cap) {
  if (s.universe().size() > cap)
    throw SemanticError("universe of " + std::to_string(s.universe().size()) +
                        " ports exceeds the enumeration cap of " +
                        std::to_string(cap) + " (raise it with --max-ports)");
}

}  // namespace

bool equiv_strong(const InteractionSet& a, const InteractionSet& b) {
  require_same_universe(a, b);
  return a.interactions() == b.interactions();
}

std::optional<OfferWitness> offer_counterexample(const InteractionSet& a,
                                                 const InteractionSet& b,
                                                 const OfferOptions& opts) {
  require_same_universe(a, b);
  require_cap(a, opts.max_ports);
  const PortIndex idx(a.universe());
  const auto ca = compile(normalize_interaction_set(a), idx);
  const auto cb = compile(normalize_interaction_set(b), idx);
  const auto k = kernels::first_offer_difference(ca, cb, idx.size(),
                                                 opts.admissible,
                                                 opts.execution);
  if (!k) return std::nullopt;
  const auto c = kernels::decode_config(*k, idx.size());
  OfferWitness w;
  w.fired = idx.ports_of(c.fired);
  w.offered = idx.ports_of(c.offered & ~c.fired);
  for (auto m : kernels::enabled_labels(ca, c)) w.left.insert(idx.ports_of(m));
  for (auto m : kernels::enabled_labels(cb, c)) w.right.insert(idx.ports_of(m));
  return w;
}

bool equiv_offer(const InteractionSet& a, const InteractionSet& b,
                 const OfferOptions& opts) {
  return !offer_counterexample(a, b, opts).has_value();
}

InteractionSet normalize_interaction_set(const InteractionSet& s) {
  std::map<PortSet, std::vector<Interaction>> groups;
  for (const auto& a : s)
    if (!a.fire().empty()) groups[a.fire()].push_back(a);
  InteractionSet out(s.universe());
  for (auto& [fire, items] : groups) {
    std::stable_sort(items.begin(), items.end(),
                     [](const Interaction& x, const Interaction& y) {
                       return x.size() < y.size();
                     });
    std::vector<Interaction> kept;
    for (const auto& a : items) {
      const bool dominated =
          std::any_of(kept.begin(), kept.end(),
                      [&](const Interaction& b) { return b.subset_of(a); });
      if (!dominated) kept.push_back(a);
    }
    for (const auto& a : kept) out.insert(a);
  }
  return out;
}

InteractionSet translate_priority(const PlainGlue& gamma,
                                  const PriorityModel& prec) {
  PortSet universe = prec.ports();
  for (const auto& a : gamma) universe.insert(a.begin(), a.end());
  InteractionSet out(universe);
  for (const auto& a : gamma) {
    std::vector<Interaction> partial{Interaction::firing(a)};
    for (const auto& b : prec.above(a)) {
      std::vector<Interaction> next;
      for (const auto& x : partial)
        for (const auto& p : b)
          if (auto m = merge(x, *Interaction::make({neg(p)})))
            next.push_back(*m);
      partial = std::move(next);
    }
    for (const auto& x : partial) out.insert(x);
  }
  return out;
}

InteractionSet firing_lift(const PlainGlue& gamma) {
  InteractionSet out;
  for (const auto& a : gamma) out.insert(Interaction::firing(a));
  return out;
}

}  // namespace bipglue
