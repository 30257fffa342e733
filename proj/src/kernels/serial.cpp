#include "common.hpp"

namespace bipglue::kernels {

std::optional<std::uint64_t> first_offer_difference_serial(
    std::span<const MaskedInteraction> a, std::span<const MaskedInteraction> b,
    std::size_t n, const ConfigFilter& admissible) {
  const auto p = detail::prepare(a, b, n, admissible);
  return detail::scan_configs(p, 0, config_count(n));
}

std::vector<MaskedInteraction> enumerate_models_serial(
    std::span<const CompiledRule> rules, std::size_t n) {
  std::vector<MaskedInteraction> out;
  detail::scan_candidates(rules, n, 0, detail::candidate_count(n), out);
  return out;
}

}  // namespace bipglue::kernels
