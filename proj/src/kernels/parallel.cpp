#include <algorithm>
#include <atomic>
#include <limits>

#include "common.hpp"

namespace bipglue::kernels {

namespace {

constexpr std::uint64_t kMinChunk = 2048;
constexpr std::uint64_t kMaxChunks = 1024;

std::uint64_t chunk_size(std::uint64_t total) {
  return std::max(kMinChunk, (total + kMaxChunks - 1) / kMaxChunks);
}

}  // namespace

std::optional<std::uint64_t> first_offer_difference_parallel(
    std::span<const MaskedInteraction> a, std::span<const MaskedInteraction> b,
    std::size_t n, const ConfigFilter& admissible) {
  const auto p = detail::prepare(a, b, n, admissible);
  const std::uint64_t total = config_count(n);
  const std::uint64_t step = chunk_size(total);
  const auto chunks = static_cast<std::int64_t>((total + step - 1) / step);
  std::vector<std::optional<std::uint64_t>> found(chunks);
  // Lowest chunk known to contain a difference; later chunks are skipped.
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    if (c > best.load(std::memory_order_relaxed)) continue;
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * step;
    const std::uint64_t end = std::min(total, begin + step);
    found[c] = detail::scan_configs(p, begin, end);
    if (found[c]) {
      auto cur = best.load();
      while (c < cur && !best.compare_exchange_weak(cur, c)) {
      }
    }
  }
  const auto b_idx = best.load();
  if (b_idx == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return found[b_idx];
}

std::vector<MaskedInteraction> enumerate_models_parallel(
    std::span<const CompiledRule> rules, std::size_t n) {
  const std::uint64_t total = detail::candidate_count(n);
  const std::uint64_t step = chunk_size(total);
  const auto chunks = static_cast<std::int64_t>((total + step - 1) / step);
  std::vector<std::vector<MaskedInteraction>> parts(chunks);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * step;
    const std::uint64_t end = std::min(total, begin + step);
    detail::scan_candidates(rules, n, begin, end, parts[c]);
  }
  std::vector<MaskedInteraction> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace bipglue::kernels
