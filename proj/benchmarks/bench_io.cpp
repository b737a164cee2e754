#include <benchmark/benchmark.h>

#include <random>

#include "holoca/armas.hpp"
#include "holoca/frame.hpp"
#include "holoca/reservoir.hpp"

namespace {

void BM_FrameRoundTrip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    holoca::AgentFrame f{1, 2, holoca::dft(holoca::BitState::single_seed(n, n / 2))};
    for (auto _ : state) {
        const auto bytes = holoca::encode_frame(f);
        benchmark::DoNotOptimize(holoca::decode_frame(bytes));
    }
    state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(16 * n));
}
BENCHMARK(BM_FrameRoundTrip)->Arg(64)->Arg(1024);

void BM_ArmasRing(benchmark::State& state) {
    const auto mode = state.range(0) ? holoca::UpdateMode::Spectral : holoca::UpdateMode::Spatial;
    for (auto _ : state) {
        auto net = holoca::build_network(4, holoca::parse_rule(110), mode, 0);
        benchmark::DoNotOptimize(net.run_cycles(holoca::BitState::single_seed(64, 32), 100));
    }
}
BENCHMARK(BM_ArmasRing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReservoirExpansion(benchmark::State& state) {
    holoca::ReservoirConfig cfg;
    cfg.redundancy = 8;
    std::mt19937_64 rng(4);
    holoca::InputSequence seq(200, std::vector<std::uint8_t>(1));
    for (auto& u : seq) u[0] = static_cast<std::uint8_t>(rng() & 1u);
    for (auto _ : state) benchmark::DoNotOptimize(holoca::expand_reservoir(seq, cfg));
}
BENCHMARK(BM_ReservoirExpansion)->Unit(benchmark::kMillisecond);

} // namespace
