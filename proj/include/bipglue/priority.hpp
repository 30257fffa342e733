#pragma once

#include <set>
#include <utility>
#include <vector>

#include "bipglue/port.hpp"

namespace bipglue {

// Plain (untyped) interaction of the classical model.
using PlainInteraction = PortSet;
using PlainGlue = std::set<PlainInteraction>;

// A strict partial order on plain interactions, given by generating pairs
// lower ≺ higher. Throws SemanticError if the transitive closure is not
// irreflexive or a pair mentions the empty interaction.
class PriorityModel {
 public:
  using Pair = std::pair<PlainInteraction, PlainInteraction>;

  PriorityModel() = default;
  explicit PriorityModel(std::vector<Pair> pairs);

  const std::set<Pair>& pairs() const noexcept { return pairs_; }
  const std::set<Pair>& closure() const noexcept { return closure_; }
  bool empty() const noexcept { return pairs_.empty(); }
  // Every b with a ≺ b in the closure.
  std::vector<PlainInteraction> above(const PlainInteraction& a) const;
  PortSet ports() const;

 private:
  std::set<Pair> pairs_;
  std::set<Pair> closure_;
};

}  // namespace bipglue
