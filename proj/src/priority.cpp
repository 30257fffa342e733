#include "bipglue/priority.hpp"

#include <map>

#include "bipglue/error.hpp"

namespace bipglue {

PriorityModel::PriorityModel(std::vector<Pair> pairs)
    : pairs_(pairs.begin(), pairs.end()) {
  std::map<PlainInteraction, std::size_t> ids;
  std::vector<PlainInteraction> nodes;
  auto id_of = [&](const PlainInteraction& a) {
    auto [it, fresh] = ids.emplace(a, nodes.size());
    if (fresh) nodes.push_back(a);
    return it->second;
  };
  for (const auto& [lo, hi] : pairs_) {
    if (lo.empty() || hi.empty())
      throw SemanticError("priority pairs must relate non-empty interactions");
    id_of(lo);
    id_of(hi);
  }
  const std::size_t n = nodes.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (const auto& [lo, hi] : pairs_) reach[ids[lo]][ids[hi]] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i][i])
      throw SemanticError("priority relation is not a strict partial order");
    for (std::size_t j = 0; j < n; ++j)
      if (reach[i][j]) closure_.emplace(nodes[i], nodes[j]);
  }
}

std::vector<PlainInteraction> PriorityModel::above(
    const PlainInteraction& a) const {
  std::vector<PlainInteraction> out;
  for (auto it = closure_.lower_bound({a, {}});
       it != closure_.end() && it->first == a; ++it)
    out.push_back(it->second);
  return out;
}

PortSet PriorityModel::ports() const {
  PortSet out;
  for (const auto& [lo, hi] : pairs_) {
    out.insert(lo.begin(), lo.end());
    out.insert(hi.begin(), hi.end());
  }
  return out;
}

}  // namespace bipglue
