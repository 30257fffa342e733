#include "common.hpp"

#include <algorithm>

#include "bipglue/error.hpp"

namespace bipglue::kernels {

std::uint64_t config_count(std::size_t n) {
  if (n > 40) throw SemanticError("too many ports for configuration count");
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= 3;
  return c;
}

Config decode_config(std::uint64_t k, std::size_t n) {
  Config c;
  for (std::size_t i = 0; i < n; ++i, k /= 3) {
    const auto bit = std::uint32_t{1} << i;
    switch (k % 3) {
      case 2:
        c.fired |= bit;
        [[fallthrough]];
      case 1:
        c.offered |= bit;
        break;
      default:
        break;
    }
  }
  return c;
}

std::vector<std::uint32_t> enabled_labels(std::span<const MaskedInteraction> s,
                                          Config c) {
  std::vector<std::uint32_t> out;
  for (const auto& a : s) {
    if (a.fire == 0) continue;
    if ((a.fire & ~c.fired) || (a.act & ~c.offered) || (a.neg & c.offered))
      continue;
    out.push_back(a.fire);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool satisfies(const MaskedInteraction& a, std::span<const CompiledRule> rules) {
  const std::uint32_t active = a.act | a.fire;
  for (const auto& r : rules) {
    const auto bit = std::uint32_t{1} << r.port;
    bool applies = true;
    switch (r.effect) {
      case CompiledRule::Effect::Tt:
        break;
      case CompiledRule::Effect::Fire:
        applies = a.fire & bit;
        break;
      case CompiledRule::Effect::Act:
        applies = active & bit;
        break;
      case CompiledRule::Effect::Neg:
        applies = a.neg & bit;
        break;
    }
    if (!applies) continue;
    const bool held = std::any_of(
        r.cause.begin(), r.cause.end(), [&](const MaskedInteraction& m) {
          return !(m.fire & ~a.fire) && !(m.act & ~active) &&
                 !(m.neg & ~a.neg);
        });
    if (!held) return false;
  }
  return true;
}

namespace detail {

std::uint64_t candidate_count(std::size_t n) {
  if (n > 31) throw SemanticError("too many ports for candidate count");
  return std::uint64_t{1} << (2 * n);
}

FingerprintProblem prepare(std::span<const MaskedInteraction> a,
                           std::span<const MaskedInteraction> b, std::size_t n,
                           const ConfigFilter& admissible) {
  FingerprintProblem p;
  p.n = n;
  p.admissible = admissible ? &admissible : nullptr;
  std::vector<std::uint32_t> labels;
  for (const auto& x : a)
    if (x.fire) labels.push_back(x.fire);
  for (const auto& x : b)
    if (x.fire) labels.push_back(x.fire);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  p.labels = labels.size();
  auto fill = [&](std::span<const MaskedInteraction> s, LabelledSide& side) {
    for (const auto& x : s) {
      if (!x.fire) continue;
      const auto id = static_cast<std::uint32_t>(
          std::lower_bound(labels.begin(), labels.end(), x.fire) -
          labels.begin());
      side.items.push_back({id, x.fire, x.act, x.neg});
    }
  };
  fill(a, p.a);
  fill(b, p.b);
  return p;
}

std::optional<std::uint64_t> scan_configs(const FingerprintProblem& p,
                                          std::uint64_t begin,
                                          std::uint64_t end) {
  if (begin >= end) return std::nullopt;
  std::vector<std::uint8_t> digits(p.n);
  Config c = decode_config(begin, p.n);
  {
    std::uint64_t k = begin;
    for (std::size_t i = 0; i < p.n; ++i, k /= 3)
      digits[i] = static_cast<std::uint8_t>(k % 3);
  }
  std::vector<std::uint8_t> seen(p.labels);
  for (std::uint64_t k = begin; k < end; ++k) {
    if (!p.admissible || (*p.admissible)(c.fired, c.offered)) {
      std::fill(seen.begin(), seen.end(), 0);
      for (const auto& x : p.a.items)
        if (!(x.fire & ~c.fired) && !(x.act & ~c.offered) &&
            !(x.neg & c.offered))
          seen[x.label] |= 1;
      for (const auto& x : p.b.items)
        if (!(x.fire & ~c.fired) && !(x.act & ~c.offered) &&
            !(x.neg & c.offered))
          seen[x.label] |= 2;
      for (auto s : seen)
        if (s == 1 || s == 2) return k;
    }
    // Odometer step to configuration k + 1.
    for (std::size_t i = 0; i < p.n; ++i) {
      const auto bit = std::uint32_t{1} << i;
      if (++digits[i] == 3) {
        digits[i] = 0;
        c.fired &= ~bit;
        c.offered &= ~bit;
        continue;
      }
      if (digits[i] == 1) c.offered |= bit;
      else c.fired |= bit;
      break;
    }
  }
  return std::nullopt;
}

void scan_candidates(std::span<const CompiledRule> rules, std::size_t n,
                     std::uint64_t begin, std::uint64_t end,
                     std::vector<MaskedInteraction>& out) {
  for (std::uint64_t k = begin; k < end; ++k) {
    MaskedInteraction a;
    std::uint64_t v = k;
    for (std::size_t i = 0; i < n; ++i, v >>= 2) {
      const auto bit = std::uint32_t{1} << i;
      switch (v & 3) {
        case 1: a.act |= bit; break;
        case 2: a.fire |= bit; break;
        case 3: a.neg |= bit; break;
        default: break;
      }
    }
    if (satisfies(a, rules)) out.push_back(a);
  }
}

}  // namespace detail

std::optional<std::uint64_t> first_offer_difference(
    std::span<const MaskedInteraction> a, std::span<const MaskedInteraction> b,
    std::size_t n, const ConfigFilter& admissible, Execution exec) {
  return exec == Execution::Serial
             ? first_offer_difference_serial(a, b, n, admissible)
             : first_offer_difference_parallel(a, b, n, admissible);
}

std::vector<MaskedInteraction> enumerate_models(
    std::span<const CompiledRule> rules, std::size_t n, Execution exec) {
  return exec == Execution::Serial ? enumerate_models_serial(rules, n)
                                   : enumerate_models_parallel(rules, n);
}

}  // namespace bipglue::kernels
