#include "bipglue/masks.hpp"

#include "bipglue/error.hpp"

namespace bipglue {

PortIndex::PortIndex(const PortSet& universe)
    : ports_(universe.begin(), universe.end()) {
  if (ports_.size() > kMaxPorts)
    throw SemanticError("port universe of " + std::to_string(ports_.size()) +
                        " ports exceeds the bitmask limit of " +
                        std::to_string(kMaxPorts));
  for (std::size_t i = 0; i < ports_.size(); ++i) index_.emplace(ports_[i], i);
}

std::size_t PortIndex::index(const Port& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw SemanticError("port '" + p.name() + "' is not in the universe");
  return it->second;
}

std::uint32_t PortIndex::mask(const PortSet& s) const {
  std::uint32_t m = 0;
  for (const auto& p : s) m |= std::uint32_t{1} << index(p);
  return m;
}

PortSet PortIndex::ports_of(std::uint32_t mask) const {
  PortSet out;
  for (std::size_t i = 0; i < ports_.size(); ++i)
    if (mask & (std::uint32_t{1} << i)) out.insert(ports_[i]);
  return out;
}

MaskedInteraction compile(const Interaction& a, const PortIndex& idx) {
  return {idx.mask(a.fire()), idx.mask(a.act()), idx.mask(a.neg())};
}

std::vector<MaskedInteraction> compile(const InteractionSet& s,
                                       const PortIndex& idx) {
  std::vector<MaskedInteraction> out;
  out.reserve(s.size());
  for (const auto& a : s) out.push_back(compile(a, idx));
  return out;
}

Interaction decompile(const MaskedInteraction& m, const PortIndex& idx) {
  return *Interaction::make(idx.ports_of(m.fire), idx.ports_of(m.act),
                            idx.ports_of(m.neg));
}

}  // namespace bipglue
