#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "bipglue/interaction_set.hpp"

namespace bipglue {

// Dense numbering of a port universe, for bitmask kernels (at most 32 ports).
class PortIndex {
 public:
  static constexpr std::size_t kMaxPorts = 32;

  explicit PortIndex(const PortSet& universe);

  std::size_t size() const noexcept { return ports_.size(); }
  const std::vector<Port>& ports() const noexcept { return ports_; }
  std::size_t index(const Port& p) const;
  std::uint32_t mask(const PortSet& s) const;
  PortSet ports_of(std::uint32_t mask) const;

 private:
  std::vector<Port> ports_;
  std::map<Port, std::size_t> index_;
};

struct MaskedInteraction {
  std::uint32_t fire = 0;
  std::uint32_t act = 0;
  std::uint32_t neg = 0;

  friend bool operator==(const MaskedInteraction&,
                         const MaskedInteraction&) = default;
  friend std::strong_ordering operator<=>(const MaskedInteraction&,
                                          const MaskedInteraction&) = default;
};

MaskedInteraction compile(const Interaction& a, const PortIndex& idx);
std::vector<MaskedInteraction> compile(const InteractionSet& s,
                                       const PortIndex& idx);
Interaction decompile(const MaskedInteraction& m, const PortIndex& idx);

}  // namespace bipglue
