#include "bipglue/interaction_set.hpp"

#include <algorithm>

#include "bipglue/error.hpp"

namespace bipglue {

InteractionSet::InteractionSet(std::set<Interaction> items)
    : items_(std::move(items)) {
  for (const auto& a : items_) {
    auto s = a.support();
    universe_.insert(s.begin(), s.end());
  }
}

InteractionSet::InteractionSet(std::set<Interaction> items, PortSet universe)
    : items_(std::move(items)), universe_(std::move(universe)) {
  for (const auto& a : items_) {
    if (!is_subset(a.support(), universe_))
      throw SemanticError("interaction '" + to_string(a) +
                          "' mentions a port outside the universe");
  }
}

void InteractionSet::insert(const Interaction& a) {
  auto s = a.support();
  universe_.insert(s.begin(), s.end());
  items_.insert(a);
}

InteractionSet InteractionSet::widened(const PortSet& extra) const {
  InteractionSet out = *this;
  out.universe_.insert(extra.begin(), extra.end());
  return out;
}

InteractionSet zero_set(PortSet universe) {
  return InteractionSet(std::move(universe));
}

InteractionSet one_set(PortSet universe) {
  return InteractionSet({Interaction{}}, std::move(universe));
}

InteractionSet set_union(const InteractionSet& a, const InteractionSet& b) {
  auto items = a.interactions();
  items.insert(b.begin(), b.end());
  return InteractionSet(std::move(items),
                        port_union(a.universe(), b.universe()));
}

InteractionSet set_product(const InteractionSet& a, const InteractionSet& b) {
  std::set<Interaction> items;
  for (const auto& x : a)
    for (const auto& y : b)
      if (auto m = merge(x, y)) items.insert(std::move(*m));
  return InteractionSet(std::move(items),
                        port_union(a.universe(), b.universe()));
}

InteractionSet set_closure_union(const InteractionSet& a,
                                 const InteractionSet& b) {
  return set_union(set_union(a, b), set_product(a, b));
}

bool compact_printable(const InteractionSet& s) {
  return std::all_of(s.begin(), s.end(), [](const Interaction& a) {
    return compact_printable(a);
  });
}

std::string to_string(const InteractionSet& s) {
  const bool compact = compact_printable(s);
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += ", ";
    first = false;
    out += to_string(a, compact);
  }
  return out + "}";
}

}  // namespace bipglue
