#include <gtest/gtest.h>

#include <random>

#include "holoca/error.hpp"
#include "holoca/evolve.hpp"
#include "holoca/langlet.hpp"
#include "holoca/projectors.hpp"
#include "support/oracles.hpp"

using namespace holoca;
using holoca::testing::random_state;

namespace {

// Pattern indicator by scanning the neighborhood cell by cell.
BitState indicator_by_scan(const BitState& x, NeighborhoodSpec spec, std::uint64_t m) {
    BitState out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        bool match = true;
        for (int o = -spec.k_left; o <= spec.k_right; ++o) {
            const int want = static_cast<int>((m >> (spec.k_right - o)) & 1u);
            if (x.at_cyclic(static_cast<std::ptrdiff_t>(i) + o) != want) match = false;
        }
        out.set(i, match);
    }
    return out;
}

} // namespace

TEST(PatternProjector, LabelIsReversedTuple) {
    const auto spec = NeighborhoodSpec::elementary();
    const auto p = PatternProjector::from_label(spec, "110");
    EXPECT_EQ(p.tuple_string(), "(0,1,1)");
    EXPECT_EQ(p.address(), 3u);
    EXPECT_EQ(p.label(), "110");
    EXPECT_EQ(PatternProjector::from_address(spec, 6).label(), "011");
    EXPECT_EQ(PatternProjector::from_address(spec, 6).tuple_string(), "(1,1,0)");
}

TEST(PatternProjector, AddressRoundTrip) {
    for (NeighborhoodSpec spec : {NeighborhoodSpec{1, 1}, NeighborhoodSpec{0, 2}, NeighborhoodSpec{2, 2}})
        for (std::uint64_t m = 0; m < spec.configurations(); ++m)
            EXPECT_EQ(PatternProjector::from_address(spec, m).address(), m);
}

TEST(PatternProjector, RejectsMalformedInput) {
    EXPECT_THROW(PatternProjector::from_label(NeighborhoodSpec::elementary(), "10"), SizeError);
    EXPECT_THROW(PatternProjector::from_label(NeighborhoodSpec::elementary(), "1x0"), RangeError);
    EXPECT_THROW(PatternProjector::from_address(NeighborhoodSpec::elementary(), 8), RangeError);
}

TEST(ProjectPattern, P111OnOnesAndZeros) {
    const auto spec = NeighborhoodSpec::elementary();
    const auto p = PatternProjector::from_address(spec, 7);
    EXPECT_EQ(project_pattern(p, BitState::ones(6)), BitState::ones(6));
    EXPECT_EQ(project_pattern(p, BitState(6)), BitState(6));
}

TEST(ProjectPattern, P000OnZeros) {
    const auto p = PatternProjector::from_address(NeighborhoodSpec::elementary(), 0);
    EXPECT_EQ(project_pattern(p, BitState(6)), BitState::ones(6));
}

TEST(ProjectPattern, IsolatedSeedHitsCenterPattern) {
    const auto p = PatternProjector::from_address(NeighborhoodSpec::elementary(), 2);
    EXPECT_EQ(project_pattern(p, BitState::single_seed(7, 3)), BitState::single_seed(7, 3));
}

TEST(ProjectPattern, MatchesScanForEveryPattern) {
    std::mt19937_64 rng(21);
    for (NeighborhoodSpec spec : {NeighborhoodSpec{1, 1}, NeighborhoodSpec{2, 1}, NeighborhoodSpec{2, 2}})
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_state(rng, 8 + rng() % 30);
            for (std::uint64_t m = 0; m < spec.configurations(); ++m) {
                const auto p = PatternProjector::from_address(spec, m);
                ASSERT_EQ(project_pattern(p, x), indicator_by_scan(x, spec, m));
                ASSERT_EQ(expand_projector_multinomial(p, x), indicator_by_scan(x, spec, m));
            }
        }
}

TEST(ProjectPattern, PatternsPartitionTheLattice) {
    std::mt19937_64 rng(22);
    for (NeighborhoodSpec spec : {NeighborhoodSpec{1, 1}, NeighborhoodSpec{0, 3}, NeighborhoodSpec{2, 2}})
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_state(rng, 5 + rng() % 40);
            EXPECT_EQ(resolution_of_identity(x, spec), std::vector<std::int64_t>(x.size(), 1));
        }
}

TEST(ProjectorEvolution, Rule110ActivePatterns) {
    const ProjectorEvolution ev(parse_rule(110));
    std::vector<std::uint64_t> addresses;
    for (const auto& p : ev.active_patterns()) addresses.push_back(p.address());
    EXPECT_EQ(addresses, (std::vector<std::uint64_t>{1, 2, 3, 5, 6}));
}

TEST(ProjectorEvolution, ExhaustiveAgreementAtLength10) {
    for (unsigned code : {30u, 90u, 106u, 110u, 150u, 184u}) {
        const auto rule = parse_rule(code);
        const ProjectorEvolution ev(rule);
        for (std::uint64_t v = 0; v < 1024; ++v) {
            const auto x = BitState::from_index(v, 10);
            ASSERT_EQ(ev.step(x), step_reference(x, rule)) << code << " " << v;
        }
    }
}

TEST(ProjectorEvolution, AgreesAcrossAllElementaryRules) {
    std::mt19937_64 rng(23);
    for (unsigned code = 0; code < 256; ++code) {
        const auto rule = parse_rule(code);
        for (int trial = 0; trial < 4; ++trial) {
            const auto x = random_state(rng, 16);
            ASSERT_EQ(evolve_via_projectors(x, rule), step_reference(x, rule)) << code;
        }
    }
}

TEST(ProjectorEvolution, WiderNeighborhoods) {
    std::mt19937_64 rng(24);
    for (NeighborhoodSpec spec : {NeighborhoodSpec{0, 1}, NeighborhoodSpec{2, 1}, NeighborhoodSpec{2, 2}}) {
        const std::uint64_t limit = std::uint64_t{1} << spec.configurations();
        for (int r = 0; r < 5; ++r) {
            const auto rule = parse_rule(rng() % limit, spec);
            const auto x = random_state(rng, 20);
            ASSERT_EQ(evolve_via_projectors(x, rule), step_reference(x, rule));
        }
    }
}

TEST(Langlet, OrderZeroAndOne) {
    const auto h0 = langlet_matrix(0);
    EXPECT_EQ(h0.side(), 2u);
    EXPECT_EQ(h0(0, 0), 1);
    EXPECT_EQ(h0(0, 1), 1);
    EXPECT_EQ(h0(1, 0), 1);
    EXPECT_EQ(h0(1, 1), 0);
    const auto h1 = langlet_matrix(1);
    const std::uint8_t expected[4][4] = {{1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(h1(r, c), expected[r][c]);
}

TEST(Langlet, EntriesAreDisjointnessIndicator) {
    for (int n = 0; n <= 6; ++n) {
        const auto h = langlet_matrix(n);
        ASSERT_EQ(h.side(), std::size_t{1} << (n + 1));
        for (std::size_t r = 0; r < h.side(); ++r)
            for (std::size_t c = 0; c < h.side(); ++c) ASSERT_EQ(h(r, c), (r & c) == 0 ? 1 : 0);
    }
}

TEST(Langlet, OnesCountIsPowerOfThree) {
    std::size_t expected = 3;
    for (int n = 0; n <= 8; ++n, expected *= 3) {
        const auto h = langlet_matrix(n);
        std::size_t ones = 0;
        for (std::size_t r = 0; r < h.side(); ++r)
            for (std::size_t c = 0; c < h.side(); ++c) ones += h(r, c);
        EXPECT_EQ(ones, expected);
    }
}

TEST(Langlet, RejectsOversizedOrders) {
    EXPECT_THROW(langlet_matrix(LangletMatrix::kMaxOrder + 1), ResourceError);
    EXPECT_THROW(langlet_matrix(-1), RangeError);
}
