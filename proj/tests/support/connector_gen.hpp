#pragma once

// Random connectors and a subset-enumeration evaluator.

#include "bipglue/connector.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace gen {

inline bipglue::ConnectorTerm connector_atom(Rng& rng,
                                             const std::vector<bipglue::Port>& ps) {
  if (coin(rng, 0.05)) return bipglue::ConnectorTerm::one();
  if (coin(rng, 0.03)) return bipglue::ConnectorTerm::zero();
  return bipglue::ConnectorTerm::port(typed_port(rng, ps));
}

// Union-free, nesting depth at most `depth`.
inline bipglue::ConnectorTerm connector(Rng& rng,
                                        const std::vector<bipglue::Port>& ps,
                                        int depth = 3) {
  using bipglue::ConnectorTerm;
  if (depth <= 1 || coin(rng, 0.2)) return connector_atom(rng, ps);
  const std::size_t k = 2 + pick(rng, 2);
  std::vector<ConnectorTerm> ops;
  for (std::size_t i = 0; i < k; ++i) {
    auto role = coin(rng) ? bipglue::Role::Trigger : bipglue::Role::Synchron;
    ops.push_back(ConnectorTerm::typed(connector(rng, ps, depth - 1), role));
  }
  return ConnectorTerm::fusion(std::move(ops));
}

}  // namespace gen

namespace oracle {

inline Raw raw_port(const bipglue::TypedPort& tp) {
  return {{tp.port.name(),
           {tp.typing == bipglue::Typing::Firing     ? '!'
            : tp.typing == bipglue::Typing::Negative ? '-'
                                                     : 'a'}}};
}

// An interaction of a fusion picks a set of operands (containing a trigger
// if there is one, all operands otherwise) and one interaction from each.
inline RawSet connector(const bipglue::ConnectorTerm& x) {
  using K = bipglue::ConnectorTerm::Kind;
  switch (x.kind()) {
    case K::Port: {
      Raw r = raw_port(x.port());
      return {r};
    }
    case K::Zero:
      return {};
    case K::One:
      return {Raw{}};
    case K::Typed:
      return connector(x.inner());
    case K::Union:
      return sum(connector(x.lhs()), connector(x.rhs()));
    case K::Fusion: {
      const auto& ops = x.operands();
      std::vector<RawSet> sems;
      bool has_trigger = false;
      for (const auto& op : ops) {
        sems.push_back(connector(op.inner()));
        has_trigger = has_trigger || op.role() == bipglue::Role::Trigger;
      }
      RawSet out;
      for (std::size_t mask = 0; mask < (std::size_t{1} << ops.size()); ++mask) {
        bool ok = true, trig = false;
        for (std::size_t i = 0; i < ops.size(); ++i) {
          const bool in = (mask >> i) & 1;
          if (in && ops[i].role() == bipglue::Role::Trigger) trig = true;
          if (!has_trigger && !in) ok = false;
        }
        if (!ok || (has_trigger && !trig)) continue;
        RawSet acc{Raw{}};
        for (std::size_t i = 0; i < ops.size(); ++i)
          if ((mask >> i) & 1) acc = product(acc, sems[i]);
        out = sum(out, acc);
      }
      return out;
    }
  }
  return {};
}

}  // namespace oracle
