#pragma once

#include <initializer_list>
#include <set>
#include <string>

#include "bipglue/interaction.hpp"

namespace bipglue {

class InteractionSet {
 public:
  using const_iterator = std::set<Interaction>::const_iterator;

  InteractionSet() = default;
  explicit InteractionSet(PortSet universe) : universe_(std::move(universe)) {}
  // The universe is extended with every mentioned port.
  explicit InteractionSet(std::set<Interaction> items);
  // Throws SemanticError when an interaction mentions a port outside universe.
  InteractionSet(std::set<Interaction> items, PortSet universe);

  const std::set<Interaction>& interactions() const noexcept { return items_; }
  const PortSet& universe() const noexcept { return universe_; }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(const Interaction& a) const { return items_.contains(a); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  // Adds a, extending the universe if needed.
  void insert(const Interaction& a);
  // Same set over a larger universe.
  InteractionSet widened(const PortSet& extra) const;

  friend bool operator==(const InteractionSet&, const InteractionSet&) = default;

 private:
  std::set<Interaction> items_;
  PortSet universe_;
};

// The constants of the algebra: 0 = {} and 1 = {∅}.
InteractionSet zero_set(PortSet universe = {});
InteractionSet one_set(PortSet universe = {});

// s1 ∪ s2 over the union of the universes.
InteractionSet set_union(const InteractionSet& a, const InteractionSet& b);
// {a ∪ b} with contradictions dropped.
InteractionSet set_product(const InteractionSet& a, const InteractionSet& b);
// s1 ∪ s2 ∪ s1·s2, the ⊕ of trees and the semantics of a + b + ab.
InteractionSet set_closure_union(const InteractionSet& a,
                                 const InteractionSet& b);

bool compact_printable(const InteractionSet& s);
// `{p, pq}`; elements are space separated when not compact printable.
std::string to_string(const InteractionSet& s);

}  // namespace bipglue
