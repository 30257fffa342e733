#pragma once

// Reference implementations written independently of the library, used to
// freeze derived expectations and to cross-check kernels.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bipglue/interaction_set.hpp"

namespace oracle {

// A raw interaction: port name -> set of typing chars ('a', '!', '-').
using Raw = std::map<std::string, std::set<char>>;
using RawSet = std::set<Raw>;

// nullopt-like: returns false when contradictory.
inline bool canonical(Raw& r) {
  for (auto& [port, ts] : r) {
    if (ts.count('-') && (ts.count('!') || ts.count('a'))) return false;
    if (ts.count('!')) ts.erase('a');
  }
  return true;
}

inline RawSet product(const RawSet& a, const RawSet& b) {
  RawSet out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Raw m = x;
      for (const auto& [p, ts] : y) m[p].insert(ts.begin(), ts.end());
      if (canonical(m)) out.insert(m);
    }
  return out;
}

inline RawSet sum(RawSet a, const RawSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline Raw to_raw(const bipglue::Interaction& a) {
  Raw r;
  for (const auto& p : a.fire()) r[p.name()].insert('!');
  for (const auto& p : a.act()) r[p.name()].insert('a');
  for (const auto& p : a.neg()) r[p.name()].insert('-');
  return r;
}

inline RawSet to_raw(const bipglue::InteractionSet& s) {
  RawSet out;
  for (const auto& a : s) out.insert(to_raw(a));
  return out;
}

// Enabled firing labels under a configuration, straight from the
// definition: fire ⊆ F, act ⊆ F ∪ O, neg disjoint from F ∪ O.
inline std::set<std::set<std::string>> enabled(const RawSet& s,
                                               const std::set<std::string>& f,
                                               const std::set<std::string>& o) {
  std::set<std::set<std::string>> out;
  for (const auto& a : s) {
    std::set<std::string> label;
    bool ok = true;
    for (const auto& [p, ts] : a) {
      const bool fired = f.count(p) > 0;
      const bool offered = fired || o.count(p) > 0;
      if (ts.count('!')) {
        label.insert(p);
        ok = ok && fired;
      }
      if (ts.count('a')) ok = ok && offered;
      if (ts.count('-')) ok = ok && !offered;
    }
    if (ok && !label.empty()) out.insert(label);
  }
  return out;
}

// Offer equivalence by recursion over all configurations of the universe.
inline bool offer_equivalent(const RawSet& a, const RawSet& b,
                             const std::vector<std::string>& universe) {
  std::set<std::string> f, o;
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == universe.size()) return enabled(a, f, o) == enabled(b, f, o);
    const auto& p = universe[i];
    if (!go(i + 1)) return false;
    o.insert(p);
    const bool offered_ok = go(i + 1);
    o.erase(p);
    if (!offered_ok) return false;
    f.insert(p);
    const bool fired_ok = go(i + 1);
    f.erase(p);
    return fired_ok;
  };
  return go(0);
}

inline std::vector<std::string> names(const bipglue::PortSet& s) {
  std::vector<std::string> out;
  for (const auto& p : s) out.push_back(p.name());
  return out;
}

}  // namespace oracle
