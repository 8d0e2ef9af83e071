#include <benchmark/benchmark.h>

#include <random>

#include "bvl/boolalg.hpp"
#include "bvl/forcing.hpp"
#include "bvl/fuzz.hpp"
#include "bvl/semantics.hpp"
#include "bvl/sets.hpp"
#include "bvl/zfc.hpp"

using namespace bvl;

static void BM_FuzzSoundness(benchmark::State& state) {
  for (auto _ : state) {
    auto s = fuzz::fuzz_soundness(1, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(s.checks);
  }
}
BENCHMARK(BM_FuzzSoundness)->Arg(25)->Arg(100);

static void BM_RegularOpenAllTopologies(benchmark::State& state) {
  auto tops = boolalg::enumerate_topologies(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& t : tops) total += boolalg::regular_open_algebra(t).size();
    benchmark::DoNotOptimize(total);
  }
  state.counters["spaces"] = static_cast<double>(tops.size());
}
BENCHMARK(BM_RegularOpenAllTopologies)->DenseRange(2, 4);

// A chain of singletons {0} in {{0}} in ... checked into powerset(2).
static void BM_BvEqCheckedChain(benchmark::State& state) {
  auto alg = std::make_shared<const boolalg::FinCBA>(boolalg::FinCBA::powerset(2));
  sets::PSet x;
  for (int i = 0; i < state.range(0); ++i) x = sets::PSet({x, sets::PSet({x})});
  auto b = sets::check(x, alg);
  for (auto _ : state) {
    sets::EqCache cache;
    benchmark::DoNotOptimize(sets::bv_eq(b, b, cache));
  }
}
BENCHMARK(BM_BvEqCheckedChain)->DenseRange(2, 6, 2);

static void BM_CohenDensity(benchmark::State& state) {
  auto ground = forcing::standard_ground(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forcing::cohen_density_check(ground).ok());
}
BENCHMARK(BM_CohenDensity)->DenseRange(2, 8, 2);

static void BM_DeltaExtract(benchmark::State& state) {
  std::mt19937_64 rng(7);
  forcing::SetFamily fam;
  const auto k = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i <= forcing::sunflower_bound(k, 3); ++i) {
    std::vector<std::uint32_t> s;
    std::uint32_t next = 0;
    for (std::size_t j = 0; j < k; ++j) s.push_back(next += 1 + static_cast<std::uint32_t>(rng() % 40));
    fam.push_back(s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(forcing::delta_extract(fam, 3).has_value());
}
BENCHMARK(BM_DeltaExtract)->DenseRange(1, 4);

static void BM_SanityAxioms(benchmark::State& state) {
  auto s = zfc::sanity_structure();
  auto axioms = zfc::zfc_axioms();
  for (auto _ : state) {
    for (const auto& [name, f] : axioms) benchmark::DoNotOptimize(semantics::realize(s, f));
  }
}
BENCHMARK(BM_SanityAxioms);

BENCHMARK_MAIN();
