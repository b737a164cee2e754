#include <benchmark/benchmark.h>

#include <random>

#include "holoca/fft.hpp"
#include "holoca/spectral.hpp"

namespace {

holoca::BitState random_state(std::size_t n) {
    std::mt19937_64 rng(2);
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
    return holoca::BitState(std::move(bits));
}

void BM_ForwardDft(benchmark::State& state) {
    std::vector<holoca::Complex> x(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1, 1);
    for (auto& v : x) v = {u(rng), u(rng)};
    for (auto _ : state) benchmark::DoNotOptimize(holoca::forward_dft(x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ForwardDft)->RangeMultiplier(4)->Range(1024, 65536)->Complexity(benchmark::oNLogN);

void BM_SpectralProduct(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = holoca::dft(random_state(n));
    for (auto _ : state) benchmark::DoNotOptimize(holoca::spectral_product(x, x));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralProduct)->RangeMultiplier(2)->Range(32, 1024)->Complexity(benchmark::oNSquared);

template <class Engine>
void spectral_engine(benchmark::State& state, const Engine& engine, std::size_t n) {
    const auto x = holoca::dft(random_state(n));
    for (auto _ : state) benchmark::DoNotOptimize(engine.step(x));
}

void BM_SpectralProjectorStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    spectral_engine(state, holoca::SpectralProjectorEngine(holoca::parse_rule(110), n), n);
}
BENCHMARK(BM_SpectralProjectorStep)->Arg(64)->Arg(256);

void BM_SpectralPolynomialStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    spectral_engine(state, holoca::SpectralPolynomialEngine(holoca::parse_rule(110), n), n);
}
BENCHMARK(BM_SpectralPolynomialStep)->Arg(64)->Arg(256);

void BM_SpectralSplitStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto split = holoca::split_linearize(holoca::parse_rule(110), holoca::SplitMode::Truncated);
    spectral_engine(state, holoca::SpectralSplitEngine(split, n), n);
}
BENCHMARK(BM_SpectralSplitStep)->Arg(64)->Arg(256);

} // namespace
