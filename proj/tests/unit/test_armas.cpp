#include <gtest/gtest.h>

#include <random>

#include "holoca/armas.hpp"
#include "holoca/evolve.hpp"
#include "holoca/frame.hpp"
#include "support/oracles.hpp"

using namespace holoca;
using holoca::testing::random_state;

namespace {

// Bitwise CRC-32 (IEEE, reflected), computed one bit at a time.
std::uint32_t bitwise_crc32(const std::vector<std::uint8_t>& data) {
    std::uint32_t crc = 0xFFFFFFFFu;
    for (auto byte : data) {
        crc ^= byte;
        for (int k = 0; k < 8; ++k) crc = (crc >> 1) ^ (0xEDB88320u & (0u - (crc & 1u)));
    }
    return ~crc;
}

AgentFrame bit_frame(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return {3, 77, random_state(rng, length)};
}

} // namespace

TEST(Crc32, KnownCheckValue) {
    const std::string s = "123456789";
    const std::vector<std::uint8_t> bytes(s.begin(), s.end());
    EXPECT_EQ(crc32(bytes), 0xCBF43926u);
    EXPECT_EQ(crc32(bytes), bitwise_crc32(bytes));
}

TEST(Frame, BitStateLayout) {
    const AgentFrame f{0x0102, 0x0A0B0C0D, BitState::from_string("1000000011")};
    const auto bytes = encode_frame(f);
    ASSERT_EQ(bytes.size(), kFrameHeaderSize + 4 + 2 + kFrameTrailerSize);
    EXPECT_EQ(std::vector<std::uint8_t>(bytes.begin(), bytes.begin() + 4),
              (std::vector<std::uint8_t>{'H', 'G', 'R', 'D'}));
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[5], 0x02);
    EXPECT_EQ(bytes[6], 0x01);
    EXPECT_EQ(bytes[7], 0x0D);
    EXPECT_EQ(bytes[10], 0x0A);
    EXPECT_EQ(bytes[11], 0);
    EXPECT_EQ(bytes[12], 6);
    EXPECT_EQ(bytes[16], 10);
    EXPECT_EQ(bytes[20], 0x01);
    EXPECT_EQ(bytes[21], 0x03);
    const std::vector<std::uint8_t> body(bytes.begin(), bytes.end() - 4);
    const auto crc = bitwise_crc32(body);
    EXPECT_EQ(bytes[bytes.size() - 4], crc & 0xFF);
    EXPECT_EQ(bytes[bytes.size() - 1], crc >> 24);
}

TEST(Frame, RoundTripBitStates) {
    for (std::size_t n : {1u, 7u, 8u, 9u, 64u, 333u}) {
        const auto f = bit_frame(n, n);
        EXPECT_EQ(decode_frame(encode_frame(f)), f);
    }
}

TEST(Frame, RoundTripSpectraBitExact) {
    std::mt19937_64 rng(61);
    const AgentFrame f{9, 1234, dft(random_state(rng, 50))};
    const auto back = decode_frame(encode_frame(f));
    EXPECT_EQ(back, f);
    EXPECT_EQ(back.payload_type(), PayloadType::Spectrum);
}

TEST(Frame, DecodeErrors) {
    const auto good = encode_frame(bit_frame(20, 1));
    auto expect_kind = [](std::vector<std::uint8_t> b, DecodeErrorKind kind) {
        try {
            decode_frame(b);
            ADD_FAILURE() << "no error";
        } catch (const DecodeError& e) {
            EXPECT_EQ(e.kind(), kind) << to_string(e.kind());
        }
    };
    auto bad_magic = good;
    bad_magic[0] = 'X';
    expect_kind(bad_magic, DecodeErrorKind::BadMagic);
    auto bad_version = good;
    bad_version[4] = 2;
    expect_kind(bad_version, DecodeErrorKind::BadVersion);
    expect_kind({good.begin(), good.begin() + 10}, DecodeErrorKind::Truncated);
    expect_kind({good.begin(), good.end() - 1}, DecodeErrorKind::Truncated);
    auto padded = good;
    padded.push_back(0);
    expect_kind(padded, DecodeErrorKind::Malformed);
    auto flipped = good;
    flipped[17] ^= 0x40;
    expect_kind(flipped, DecodeErrorKind::CrcMismatch);
}

TEST(Frame, EverySingleBitFlipIsDetected) {
    const auto good = encode_frame(bit_frame(40, 2));
    for (std::size_t i = 0; i < good.size(); ++i)
        for (int b = 0; b < 8; ++b) {
            auto bad = good;
            bad[i] ^= static_cast<std::uint8_t>(1u << b);
            EXPECT_THROW(decode_frame(bad), DecodeError) << i << ":" << b;
        }
}

TEST(Armas, SpatialRingMatchesReferenceTrajectory) {
    const auto rule = parse_rule(110);
    auto net = build_network(4, rule, UpdateMode::Spatial, 0);
    const auto x0 = BitState::single_seed(64, 32);
    const auto result = net.run_cycles(x0, 40);
    const auto ref = evolve(x0, rule, 40);
    ASSERT_EQ(result.log.size(), 41u);
    for (std::size_t h = 0; h <= 40; ++h) {
        EXPECT_EQ(result.log[h].state, ref[h]);
        EXPECT_EQ(result.log[h].step, h);
    }
    EXPECT_EQ(result.log[1].agent, 0);
    EXPECT_EQ(result.log[2].agent, 1);
    EXPECT_EQ(result.log[5].agent, 0);
}

TEST(Armas, SpectralRingWithSplitEngine) {
    const auto rule = parse_rule(110);
    auto net = build_network(3, split_linearize(rule, SplitMode::Truncated), UpdateMode::Spectral, 0);
    const auto x0 = BitState::single_seed(32, 16);
    const auto result = net.run_cycles(x0, 30);
    const auto ref = evolve(x0, rule, 30);
    for (std::size_t h = 0; h <= 30; ++h) {
        EXPECT_EQ(result.log[h].state, ref[h]);
        EXPECT_LT(result.log[h].max_rounding_error, 1e-6);
    }
}

TEST(Armas, WindowHoldsOneStatePerAgentPlusInFlight) {
    auto net = build_network(4, parse_rule(110), UpdateMode::Spatial, 0);
    const auto x0 = BitState::single_seed(32, 5);
    const auto result = net.run_cycles(x0, 12);
    const auto ref = evolve(x0, parse_rule(110), 12);
    ASSERT_EQ(result.window.states.size(), 5u);
    EXPECT_EQ(result.window.first_step, 8u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(result.window.states[i], ref[8 + i]);
}

TEST(Armas, PerturbationAppliedAtTargetAgent) {
    const auto rule = parse_rule(110);
    auto net = build_network(4, rule, UpdateMode::Spatial, 0);
    const auto x0 = BitState::single_seed(32, 10);
    const auto p = BitState::single_seed(32, 20);
    net.inject(2, p);
    const auto result = net.run_cycles(x0, 10);
    ASSERT_EQ(result.events.size(), 1u);
    EXPECT_EQ(result.events[0].agent, 2);
    EXPECT_EQ(result.events[0].step, 2u);
    // Agent 2 receives the step-2 state, XORs it with p and steps it.
    auto ref = evolve(x0, rule, 2);
    auto cur = step_reference(ref[2] ^ p, rule);
    EXPECT_EQ(result.log[3].state, cur);
    for (std::size_t h = 4; h <= 10; ++h) {
        cur = step_reference(cur, rule);
        EXPECT_EQ(result.log[h].state, cur);
    }
}

TEST(Armas, SpectralPerturbationMatchesSpatial) {
    const auto rule = parse_rule(110);
    const auto x0 = BitState::single_seed(32, 10);
    const auto p = BitState::from_string("00000000000000000000111100000000");
    auto a = build_network(3, rule, UpdateMode::Spatial, 0);
    auto b = build_network(3, split_linearize(rule, SplitMode::Truncated), UpdateMode::Spectral, 0);
    a.inject(1, p);
    b.inject(1, p);
    const auto ra = a.run_cycles(x0, 15);
    const auto rb = b.run_cycles(x0, 15);
    for (std::size_t h = 0; h <= 15; ++h) EXPECT_EQ(ra.log[h].state, rb.log[h].state);
}

TEST(Armas, DeterministicLogs) {
    auto run = [] {
        auto net = build_network(5, parse_rule(54), UpdateMode::Spatial, 9);
        return hop_log_jsonl(net.run_cycles(BitState::from_string("0010110100101101"), 25));
    };
    EXPECT_EQ(run(), run());
}

TEST(Armas, CorruptedDeliveryRaisesTransportError) {
    auto net = build_network(3, parse_rule(110), UpdateMode::Spatial, 0);
    net.corrupt_next_delivery(1, 18);
    try {
        net.run_cycles(BitState::single_seed(16, 3), 10);
        FAIL() << "no transport error";
    } catch (const TransportError& e) {
        EXPECT_EQ(e.agent(), 1);
        EXPECT_EQ(e.kind(), DecodeErrorKind::CrcMismatch);
    }
}

TEST(Armas, UnknownAgentsAreRejected) {
    auto net = build_network(3, parse_rule(110), UpdateMode::Spatial, 0);
    EXPECT_THROW(net.inject(3, BitState(8)), RoutingError);
    EXPECT_THROW(net.corrupt_next_delivery(7, 0), RoutingError);
    EXPECT_THROW(build_network(0, parse_rule(110), UpdateMode::Spatial, 0), ConfigurationError);
}

TEST(Armas, FrameCaptureRecordsEveryHop) {
    auto net = build_network(2, parse_rule(110), UpdateMode::Spectral, 0);
    net.set_frame_capture(true);
    net.run_cycles(BitState::single_seed(16, 3), 6);
    ASSERT_EQ(net.captured_frames().size(), 7u);
    for (const auto& bytes : net.captured_frames())
        EXPECT_EQ(decode_frame(bytes).payload_type(), PayloadType::Spectrum);
}
