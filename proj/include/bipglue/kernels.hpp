#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bipglue/masks.hpp"

namespace bipglue {

enum class Execution { Serial, Parallel };

// Restricts the port configurations considered by offer fingerprints.
// Arguments are the fired and offered port masks (fired ⊆ offered).
using ConfigFilter =
    std::function<bool(std::uint32_t fired, std::uint32_t offered)>;

namespace kernels {

// Port configuration number k over n ports: base-3 digits, least significant
// digit for port 0; 0 = silent, 1 = offered, 2 = fired.
struct Config {
  std::uint32_t fired = 0;
  std::uint32_t offered = 0;  // includes fired ports
};
Config decode_config(std::uint64_t k, std::size_t n);
std::uint64_t config_count(std::size_t n);

// Sorted, deduplicated firing labels of s enabled under c.
std::vector<std::uint32_t> enabled_labels(std::span<const MaskedInteraction> s,
                                          Config c);

// Smallest configuration index at which the enabled labels of a and b
// differ, or nullopt. Both implementations return the same answer.
std::optional<std::uint64_t> first_offer_difference_serial(
    std::span<const MaskedInteraction> a, std::span<const MaskedInteraction> b,
    std::size_t n, const ConfigFilter& admissible = {});
std::optional<std::uint64_t> first_offer_difference_parallel(
    std::span<const MaskedInteraction> a, std::span<const MaskedInteraction> b,
    std::size_t n, const ConfigFilter& admissible = {});
std::optional<std::uint64_t> first_offer_difference(
    std::span<const MaskedInteraction> a, std::span<const MaskedInteraction> b,
    std::size_t n, const ConfigFilter& admissible, Execution exec);

// A cause in DNF; each monomial holds when its fire vars are fired, its act
// vars are fired or activated and its neg vars are negative.
struct CompiledRule {
  enum class Effect { Tt, Fire, Act, Neg };
  Effect effect = Effect::Tt;
  std::size_t port = 0;
  std::vector<MaskedInteraction> cause;
};

bool satisfies(const MaskedInteraction& a, std::span<const CompiledRule> rules);

// All canonical interactions over n ports (4^n candidates) satisfying every
// rule, in candidate order.
std::vector<MaskedInteraction> enumerate_models_serial(
    std::span<const CompiledRule> rules, std::size_t n);
std::vector<MaskedInteraction> enumerate_models_parallel(
    std::span<const CompiledRule> rules, std::size_t n);
std::vector<MaskedInteraction> enumerate_models(
    std::span<const CompiledRule> rules, std::size_t n, Execution exec);

}  // namespace kernels
}  // namespace bipglue
