#pragma once

#include "bipglue/rules.hpp"
#include "support/generators.hpp"

namespace gen {

// A random firing-only system: each cause is ff, tt or a few monomials over
// the other ports.
inline bipglue::CausalRuleSystem firing_rules(Rng& rng, std::size_t nports) {
  using namespace bipglue;
  const auto ps = ports(nports);
  std::map<Effect, CauseFormula> rules;
  for (const auto& e : effect_universe(port_set(nports), RuleMode::FiringOnly)) {
    std::vector<Port> others;
    for (const auto& p : ps)
      if (!e || p != e->port) others.push_back(p);
    std::set<Interaction> monos;
    const auto k = pick(rng, 4);
    if (k == 0) {
      rules.emplace(e, CauseFormula::ff());
      continue;
    }
    if (k == 1 && e) {
      rules.emplace(e, CauseFormula::tt());
      continue;
    }
    for (std::size_t i = 0; i < 1 + pick(rng, 2); ++i)
      monos.insert(interaction(rng, others, 0.4));
    rules.emplace(e, CauseFormula(monos));
  }
  return CausalRuleSystem(port_set(nports), RuleMode::FiringOnly, rules);
}

}  // namespace gen
