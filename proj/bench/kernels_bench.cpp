#include <benchmark/benchmark.h>

#include <random>

#include "bipglue/kernels.hpp"

using namespace bipglue;
using namespace bipglue::kernels;

namespace {

// Random canonical interactions over n ports: per port silent, act, fire or neg.
std::vector<MaskedInteraction> random_set(std::size_t n, std::size_t count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MaskedInteraction> out;
  for (std::size_t i = 0; i < count; ++i) {
    MaskedInteraction a;
    for (std::size_t p = 0; p < n; ++p) {
      const std::uint32_t bit = std::uint32_t{1} << p;
      switch (rng() % 6) {
        case 0: a.act |= bit; break;
        case 1: a.fire |= bit; break;
        case 2: a.neg |= bit; break;
        default: break;
      }
    }
    out.push_back(a);
  }
  return out;
}

// Identical sets force a scan of every configuration.
void BM_OfferSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = random_set(n, 24, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(first_offer_difference_serial(s, s, n));
  state.SetItemsProcessed(state.iterations() * config_count(n));
}

void BM_OfferParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = random_set(n, 24, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(first_offer_difference_parallel(s, s, n));
  state.SetItemsProcessed(state.iterations() * config_count(n));
}

std::vector<CompiledRule> random_rules(std::size_t n) {
  std::vector<CompiledRule> rules;
  for (std::size_t p = 0; p < n; ++p) {
    CompiledRule r;
    r.effect = CompiledRule::Effect::Fire;
    r.port = p;
    for (auto m : random_set(n, 2, 100 + p)) {
      const std::uint32_t own = ~(std::uint32_t{1} << p);
      m.act &= own;
      m.fire &= own;
      m.neg &= own;
      r.cause.push_back(m);
    }
    rules.push_back(r);
  }
  return rules;
}

void BM_ModelsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rules = random_rules(n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_models_serial(rules, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}

void BM_ModelsParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rules = random_rules(n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_models_parallel(rules, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}

}  // namespace

BENCHMARK(BM_OfferSerial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OfferParallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModelsSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModelsParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
