#pragma once

#include <optional>
#include <set>

#include "bipglue/interaction_set.hpp"
#include "bipglue/kernels.hpp"
#include "bipglue/priority.hpp"

namespace bipglue {

struct OfferOptions {
  std::size_t max_ports = 16;
  Execution execution = Execution::Parallel;
  // Empty: every port configuration counts.
  ConfigFilter admissible;
};

// A configuration on which two sets enable different firing labels.
struct OfferWitness {
  PortSet fired;
  PortSet offered;  // offered but not fired
  std::set<PortSet> left, right;
};

// Set equality. Throws SemanticError on universe mismatch.
bool equiv_strong(const InteractionSet& a, const InteractionSet& b);

// Offer equivalence through port-configuration fingerprints. Throws
// SemanticError on universe mismatch or when the universe exceeds max_ports.
bool equiv_offer(const InteractionSet& a, const InteractionSet& b,
                 const OfferOptions& opts = {});
std::optional<OfferWitness> offer_counterexample(const InteractionSet& a,
                                                 const InteractionSet& b,
                                                 const OfferOptions& opts = {});

// Drops empty-firing interactions and those dominated componentwise by
// another with the same firing support.
InteractionSet normalize_interaction_set(const InteractionSet& s);

// Priority removal: a ≺ b_1..b_m becomes fire(a) plus one negated port of
// each b_i, in every combination.
InteractionSet translate_priority(const PlainGlue& gamma,
                                  const PriorityModel& prec);

// Every interaction in gamma, all ports firing.
InteractionSet firing_lift(const PlainGlue& gamma);

}  // namespace bipglue
