#include <benchmark/benchmark.h>

#include <random>

#include "holoca/evolve.hpp"
#include "holoca/linearize.hpp"
#include "holoca/polynomial.hpp"
#include "holoca/projectors.hpp"

namespace {

holoca::BitState random_state(std::size_t n, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    return holoca::BitState(std::move(bits));
}

void BM_ReferenceStep(benchmark::State& state) {
    const auto rule = holoca::parse_rule(110);
    auto x = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        x = holoca::step_reference(x, rule);
        benchmark::DoNotOptimize(x);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReferenceStep)->Arg(64)->Arg(1024)->Arg(16384);

void BM_ProjectorStep(benchmark::State& state) {
    const holoca::ProjectorEvolution ev(holoca::parse_rule(110));
    auto x = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        x = ev.step(x);
        benchmark::DoNotOptimize(x);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProjectorStep)->Arg(64)->Arg(1024)->Arg(16384);

void BM_PolynomialStep(benchmark::State& state) {
    const holoca::PolynomialStepper stepper(holoca::parse_rule(110));
    auto x = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        x = stepper.step(x);
        benchmark::DoNotOptimize(x);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PolynomialStep)->Arg(64)->Arg(1024);

void BM_SplitStep(benchmark::State& state) {
    const auto split = holoca::split_linearize(holoca::parse_rule(110), holoca::SplitMode::Truncated);
    auto x = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        x = holoca::split_step(x, split);
        benchmark::DoNotOptimize(x);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SplitStep)->Arg(64)->Arg(1024)->Arg(16384);

void BM_MaskSearch(benchmark::State& state) {
    const std::vector<std::int64_t> target{0, 1, 0, 0, 0, 1, 0, -1};
    for (auto _ : state) benchmark::DoNotOptimize(holoca::search_linear_mask(target, holoca::NeighborhoodSpec::elementary()));
}
BENCHMARK(BM_MaskSearch);

} // namespace
BENCHMARK_MAIN();
