#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "holoca/error.hpp"
#include "holoca/evolve.hpp"
#include "holoca/spectral.hpp"
#include "support/oracles.hpp"

using namespace holoca;
using holoca::testing::naive_dft;
using holoca::testing::random_state;

namespace {

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<Complex> naive_idft(const std::vector<Complex>& X) {
    const std::size_t n = X.size();
    std::vector<Complex> conj_in(n);
    for (std::size_t k = 0; k < n; ++k) conj_in[k] = std::conj(X[k]);
    auto out = naive_dft(conj_in);
    for (auto& v : out) v = std::conj(v) / static_cast<double>(n);
    return out;
}

} // namespace

TEST(Dft, MatchesNaiveTransform) {
    std::mt19937_64 rng(41);
    for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 40u, 63u, 64u, 100u, 257u}) {
        const auto x = random_state(rng, n);
        EXPECT_LT(max_diff(dft(x).values(), naive_dft(x)), 1e-9 * static_cast<double>(n)) << n;
    }
}

TEST(Dft, ComplexInputMatchesNaive) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<Complex> x(37);
    for (auto& v : x) v = {u(rng), u(rng)};
    EXPECT_LT(max_diff(dft(std::span<const Complex>(x)).values(), naive_dft(x)), 1e-12 * 37 * 4);
    EXPECT_LT(max_diff(idft_complex(Spectrum(x)), naive_idft(x)), 1e-12 * 37);
}

TEST(Dft, OnesAndSingleSeed) {
    const auto ones = dft(BitState::ones(8));
    EXPECT_LT(ones.max_abs_difference(Spectrum::ones(8)), 1e-12);
    const auto seed = dft(BitState::single_seed(8, 0));
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(seed[k] - Complex(1, 0)), 0, 1e-12);
}

TEST(Dft, RoundTripsBitStates) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_state(rng, 1 + rng() % 200);
        EXPECT_EQ(to_bit_state(dft(x)), x);
    }
}

TEST(Idft, RejectsNonRealSpectra) {
    Spectrum s(8);
    s[1] = {1.0, 0.0}; // no conjugate partner at k = 7
    EXPECT_THROW(idft(s), DomainError);
}

TEST(ToBitState, RejectsNonBinaryValues) {
    std::vector<double> half(8, 0.5);
    EXPECT_THROW(to_bit_state(dft(std::span<const double>(half))), DomainError);
}

TEST(Spectrum, ComplementChangesOnlyDc) {
    const auto x = BitState::from_string("1100101");
    const auto c = dft(x).complement();
    EXPECT_LT(c.max_abs_difference(dft(x.complement())), 1e-12);
}

TEST(Eigenvalues, ShiftByOne) {
    // (K_1 x)_i = x_{i+1} has DFT e^{+2 pi i k / L} X_k.
    const std::size_t n = 12;
    const auto lambda = circulant_eigenvalues(ConvolutionMask::shift(1), n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex expected = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
        EXPECT_NEAR(std::abs(lambda[k] - expected), 0, 1e-12);
    }
}

TEST(Eigenvalues, DiagonalizeTheCirculantAction) {
    std::mt19937_64 rng(44);
    const std::vector<ConvolutionMask> masks{
        ConvolutionMask::identity(), ConvolutionMask::shift(-1), ConvolutionMask::shift(3),
        ConvolutionMask::addressing(NeighborhoodSpec::elementary()),
        ConvolutionMask(std::map<int, std::int64_t>{{-2, -1}, {0, 3}, {2, 5}})};
    for (const auto& mask : masks)
        for (std::size_t n : {5u, 16u, 31u}) {
            const auto x = random_state(rng, n);
            const auto cx = apply_circulant(mask, x);
            std::vector<Complex> cxc(cx.begin(), cx.end());
            const auto lhs = naive_dft(cxc);
            const auto rhs = circulant_eigenvalues(mask, n).apply(dft(x));
            EXPECT_LT(max_diff(lhs, rhs.values()), 1e-9 * n);
        }
}

TEST(Eigenvalues, WrapAroundOffsetsFold) {
    // On L = 3 the offsets -1 and +2 coincide.
    const auto a = circulant_eigenvalues(ConvolutionMask::shift(-1), 3);
    const auto b = circulant_eigenvalues(ConvolutionMask::shift(2), 3);
    EXPECT_LT(max_diff(a.values(), b.values()), 1e-12);
}

TEST(SpectralProduct, IsDftOfHadamardProduct) {
    std::mt19937_64 rng(45);
    for (std::size_t n : {4u, 9u, 32u, 50u}) {
        const auto x = random_state(rng, n);
        const auto y = random_state(rng, n);
        const auto prod = spectral_product(dft(x), dft(y));
        std::vector<Complex> xy(n);
        for (std::size_t i = 0; i < n; ++i) xy[i] = x[i] * y[i];
        EXPECT_LT(max_diff(prod.values(), naive_dft(xy)), 1e-9 * n);
    }
}

TEST(SpectralProduct, OnesIsNeutral) {
    const auto x = dft(BitState::from_string("0110100111"));
    EXPECT_LT(spectral_product(Spectrum::ones(10), x).max_abs_difference(x), 1e-12);
}

TEST(SpectralProduct, IdempotentOnBitStates) {
    const auto x = dft(BitState::from_string("0110100111"));
    EXPECT_LT(spectral_product(x, x).max_abs_difference(x), 1e-12);
}

TEST(SpectralProduct, SizeMismatch) {
    EXPECT_THROW(spectral_product(Spectrum(4), Spectrum(5)), SizeError);
}

TEST(SpectralProjector, MatchesReferenceForAllRules) {
    std::mt19937_64 rng(46);
    for (unsigned code = 0; code < 256; ++code) {
        const auto rule = parse_rule(code);
        const SpectralProjectorEngine engine(rule, 32);
        const auto x = random_state(rng, 32);
        const auto Y = engine.step(dft(x));
        const auto expected = dft(step_reference(x, rule));
        ASSERT_LT(Y.max_abs_difference(expected), 1e-8 * 32) << code;
        ASSERT_EQ(to_bit_state(Y), step_reference(x, rule)) << code;
    }
}

TEST(SpectralProjector, Rule110AtLength64) {
    std::mt19937_64 rng(47);
    const auto rule = parse_rule(110);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_state(rng, 64);
        const auto Y = spectral_projector_step(dft(x), rule);
        EXPECT_LT(Y.max_abs_difference(dft(step_reference(x, rule))), 1e-8 * 64);
    }
}

TEST(SpectralPolynomial, MatchesReference) {
    std::mt19937_64 rng(48);
    for (unsigned code : {30u, 90u, 106u, 110u, 204u}) {
        const auto rule = parse_rule(code);
        const SpectralPolynomialEngine engine(rule, 64);
        for (int trial = 0; trial < 5; ++trial) {
            const auto x = random_state(rng, 64);
            const auto Y = engine.step(dft(x));
            EXPECT_LT(Y.max_abs_difference(dft(step_reference(x, rule))), 1e-8 * 64) << code;
        }
    }
}

TEST(SpectralPolynomial, RejectsNonBitSpectra) {
    std::vector<double> half(16, 0.5);
    EXPECT_THROW(spectral_polynomial_step(dft(std::span<const double>(half)), parse_rule(110)), DomainError);
}

TEST(SpectralSplit, LinearTermOfRule110IsIdentityPlusShift) {
    const auto split = split_linearize(parse_rule(110), SplitMode::Truncated);
    const SpectralSplitEngine engine(split, 16);
    const auto x = BitState::from_string("1011000111010010");
    const auto X = dft(x);
    std::vector<Complex> expected(16);
    for (std::size_t i = 0; i < 16; ++i) expected[i] = x[i] + x[(i + 1) % 16];
    EXPECT_LT(max_diff(engine.linear_term(X).values(), naive_dft(expected)), 1e-10);
}

TEST(SpectralSplit, MatchesReferenceForAllRules) {
    std::mt19937_64 rng(49);
    for (unsigned code = 0; code < 256; ++code)
        for (auto mode : {SplitMode::Truncated, SplitMode::Raw}) {
            const auto rule = parse_rule(code);
            const auto x = random_state(rng, 24);
            const auto Y = spectral_split_step(dft(x), split_linearize(rule, mode));
            ASSERT_LT(Y.max_abs_difference(dft(step_reference(x, rule))), 1e-8 * 24) << code;
        }
}

TEST(SpectralEngines, LengthMismatchIsRejected) {
    const SpectralProjectorEngine engine(parse_rule(110), 16);
    EXPECT_THROW(engine.step(Spectrum(15)), SizeError);
}

TEST(SpectralEngines, IteratedRegenerationTracksReference) {
    // Rounding back to bits each step keeps the spectral path on the
    // reference trajectory indefinitely.
    const auto rule = parse_rule(110);
    const SpectralProjectorEngine engine(rule, 64);
    BitState ref = BitState::single_seed(64, 32);
    Spectrum X = dft(ref);
    for (int t = 0; t < 100; ++t) {
        X = engine.step(X);
        ref = step_reference(ref, rule);
        const auto bits = to_bit_state(X);
        ASSERT_EQ(bits, ref) << t;
        X = dft(bits);
    }
}
