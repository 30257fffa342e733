#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bipglue/interaction_set.hpp"
#include "bipglue/priority.hpp"

namespace bipglue {

struct Transition {
  std::string from;
  PortSet label;  // never empty; the empty self-loop is implicit
  std::string to;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

class Lts {
 public:
  // Throws SemanticError on duplicate or unknown states, empty labels or
  // labels outside ports.
  Lts(std::vector<std::string> states, std::string initial, PortSet ports,
      std::vector<Transition> transitions);

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& initial() const noexcept { return initial_; }
  const PortSet& ports() const noexcept { return ports_; }
  const std::set<Transition>& transitions() const noexcept {
    return transitions_;
  }
  bool has_state(const std::string& q) const { return index_.contains(q); }
  std::size_t index(const std::string& q) const;

 private:
  std::vector<std::string> states_;
  std::map<std::string, std::size_t> index_;
  std::string initial_;
  PortSet ports_;
  std::set<Transition> transitions_;
};

// An LTS with an offer predicate. Every port on an outgoing transition of a
// state is offered there; extra offers are allowed.
class Behaviour {
 public:
  // Throws SemanticError if the offers violate closure or mention unknown
  // states or ports.
  Behaviour(Lts lts, std::map<std::string, PortSet> offers);

  const Lts& lts() const noexcept { return lts_; }
  const PortSet& ports() const noexcept { return lts_.ports(); }
  const std::string& initial() const noexcept { return lts_.initial(); }
  const PortSet& offers(const std::string& q) const;
  const std::map<std::string, PortSet>& offer_map() const noexcept {
    return offers_;
  }

 private:
  Lts lts_;
  std::map<std::string, PortSet> offers_;
};

using OfferPairs = std::set<std::pair<std::string, Port>>;

// Offers mandated by the transitions plus extra. With no extras the
// behaviour is atomic: a port is offered iff it labels an enabled transition.
Behaviour offer_closure(const Lts& lts, const OfferPairs& extra = {});
// Offers of b beyond those mandated by its transitions.
OfferPairs extra_offers(const Behaviour& b);

// Composition with typed interactions. Product state names join component
// state names with commas; only states reachable from the initial product
// state are kept.
Behaviour compose_extended(const InteractionSet& gamma,
                           const std::vector<Behaviour>& comps);
// Classical composition with plain interactions; offers are lifted the same
// way so that results stay composable.
Behaviour compose_classical(const PlainGlue& gamma,
                            const std::vector<Behaviour>& comps);

// Drops q -a-> q' when some a ≺ a' is enabled at q.
Behaviour restrict_priority_classical(const Behaviour& b,
                                      const PriorityModel& prec);
// Drops q -a-> q' when every port of some a ≺ a' is offered at q.
Behaviour restrict_priority_offer(const Behaviour& b,
                                  const PriorityModel& prec);

// Only the part reachable from the initial state.
Behaviour reachable_part(const Behaviour& b);

// Isomorphism of the reachable fragments (labels and offers preserved,
// initial states matched). False when the port universes differ.
bool behaviour_equal(const Behaviour& a, const Behaviour& b);

}  // namespace bipglue
