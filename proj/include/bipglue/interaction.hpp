#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bipglue/port.hpp"

namespace bipglue {

// A canonical, contradiction-free typed interaction. Firing absorbs
// activation on the same port; the empty interaction is the constant 1.
class Interaction {
 public:
  Interaction() = default;

  // nullopt when some port is negative and also firing or activation.
  static std::optional<Interaction> make(std::span<const TypedPort> raw);
  static std::optional<Interaction> make(std::initializer_list<TypedPort> raw);
  static std::optional<Interaction> make(PortSet fire, PortSet act,
                                         PortSet neg);
  // Pure firing interaction from a plain port set.
  static Interaction firing(const PortSet& ports);

  const PortSet& fire() const noexcept { return fire_; }
  const PortSet& act() const noexcept { return act_; }
  const PortSet& neg() const noexcept { return neg_; }

  bool empty() const noexcept {
    return fire_.empty() && act_.empty() && neg_.empty();
  }
  std::size_t size() const noexcept {
    return fire_.size() + act_.size() + neg_.size();
  }
  PortSet support() const;
  // Sorted by port name.
  std::vector<TypedPort> typed_ports() const;
  bool contains(const TypedPort& tp) const;

  // Componentwise inclusion of the canonical supports.
  bool subset_of(const Interaction& other) const;
  // Domination in the union order: fire ⊆ fire', act ⊆ act' ∪ fire',
  // neg ⊆ neg'. Equivalent to other == merge(*this, other).
  bool below(const Interaction& other) const;

  friend bool operator==(const Interaction&, const Interaction&) = default;
  friend std::strong_ordering operator<=>(const Interaction& a,
                                          const Interaction& b);

 private:
  PortSet fire_, act_, neg_;
};

// Interaction union (the AI product on singletons). nullopt on contradiction.
std::optional<Interaction> merge(const Interaction& a, const Interaction& b);

// Componentwise difference a \ b, used to label tree children.
Interaction difference(const Interaction& a, const Interaction& b);

// Canonicalization of a raw typed-port set, as a free function.
inline std::optional<Interaction> canonicalize_interaction(
    std::span<const TypedPort> raw) {
  return Interaction::make(raw);
}

// True when the interaction can be printed without separators.
bool compact_printable(const Interaction& a);
// "1" for the empty interaction.
std::string to_string(const Interaction& a, bool compact = false);

}  // namespace bipglue
