#pragma once

// Shared helpers for the serial and OpenMP kernels.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bipglue/kernels.hpp"

namespace bipglue::kernels::detail {

// Interactions of both sides rewritten over a shared label numbering.
struct LabelledSide {
  struct Item {
    std::uint32_t label;
    std::uint32_t fire, act, neg;
  };
  std::vector<Item> items;
};

struct FingerprintProblem {
  std::size_t n = 0;
  std::size_t labels = 0;
  LabelledSide a, b;
  const ConfigFilter* admissible = nullptr;
};

FingerprintProblem prepare(std::span<const MaskedInteraction> a,
                           std::span<const MaskedInteraction> b, std::size_t n,
                           const ConfigFilter& admissible);

// First differing configuration in [begin, end).
std::optional<std::uint64_t> scan_configs(const FingerprintProblem& p,
                                          std::uint64_t begin,
                                          std::uint64_t end);

// Models among candidates [begin, end) of the 4^n enumeration.
void scan_candidates(std::span<const CompiledRule> rules, std::size_t n,
                     std::uint64_t begin, std::uint64_t end,
                     std::vector<MaskedInteraction>& out);

std::uint64_t candidate_count(std::size_t n);

}  // namespace bipglue::kernels::detail
