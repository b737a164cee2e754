#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "holoca/circulant.hpp"
#include "holoca/error.hpp"
#include "holoca/evolve.hpp"
#include "holoca/polynomial.hpp"
#include "holoca/rule.hpp"
#include "support/oracles.hpp"

using namespace holoca;
using holoca::testing::elementary_step_by_lookup;
using holoca::testing::random_state;

namespace {

std::vector<std::uint8_t> bits(std::initializer_list<int> v) {
    return {v.begin(), v.end()};
}

std::vector<std::int64_t> as_int64(const std::vector<BigInt>& v) {
    std::vector<std::int64_t> out;
    for (const auto& b : v) out.push_back(static_cast<std::int64_t>(b));
    return out;
}

} // namespace

TEST(ParseRule, Rule110ExpandsLsbFirst) {
    EXPECT_EQ(parse_rule(110).outputs(), bits({0, 1, 1, 1, 0, 1, 1, 0}));
}

TEST(ParseRule, ZeroAndIdentityRules) {
    EXPECT_EQ(parse_rule(0).outputs(), bits({0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(parse_rule(204).outputs(), bits({0, 0, 1, 1, 0, 0, 1, 1}));
    for (std::uint64_t m = 0; m < 8; ++m)
        EXPECT_EQ(parse_rule(204).output(m), center_bit(NeighborhoodSpec::elementary(), m));
}

TEST(ParseRule, CodeRoundTripsOverAllElementaryRules) {
    for (std::uint64_t code = 0; code < 256; ++code) EXPECT_EQ(parse_rule(code).code(), code);
}

TEST(ParseRule, RejectsOutOfRangeCodes) {
    EXPECT_THROW(parse_rule(256), RangeError);
    EXPECT_THROW(parse_rule(999), RangeError);
    EXPECT_NO_THROW(parse_rule(65535, {1, 2}));
    EXPECT_THROW(parse_rule(0, {3, 3}), RangeError);
}

TEST(StepReference, AllZerosStayZeroUnderRule110) {
    EXPECT_EQ(step_reference(BitState(16), parse_rule(110)), BitState(16));
}

TEST(StepReference, SingleSeedUnderRule110) {
    // Cell 3 sees (0,0,1) -> sigma_1 = 1, cell 4 sees (0,1,0) -> sigma_2 = 1,
    // cell 5 sees (1,0,0) -> sigma_4 = 0.
    const auto y = step_reference(BitState::single_seed(8, 4), parse_rule(110));
    EXPECT_EQ(y.to_string(), "00011000");
}

TEST(StepReference, IdentityRuleLeavesStateUnchanged) {
    const auto x = BitState::single_seed(8, 4);
    EXPECT_EQ(step_reference(x, parse_rule(204)), x);
}

TEST(StepReference, RejectsLatticeSmallerThanNeighborhood) {
    EXPECT_THROW(step_reference(BitState(2), parse_rule(110)), SizeError);
}

TEST(StepReference, AgreesWithStringLookupOracle) {
    std::mt19937_64 rng(7);
    for (unsigned rule = 0; rule < 256; ++rule)
        for (int trial = 0; trial < 8; ++trial) {
            const auto x = random_state(rng, 3 + rng() % 40);
            ASSERT_EQ(step_reference(x, parse_rule(rule)), elementary_step_by_lookup(x, rule)) << rule;
        }
}

TEST(StepReference, WiderNeighborhoodAddressesLeftmostBitFirst) {
    // k_left = 2, k_right = 0: address = 4 x_{i-2} + 2 x_{i-1} + x_i.
    const NeighborhoodSpec spec{2, 0};
    const auto rule = parse_rule(1u << 4, spec); // fires only on (1,0,0)
    const auto y = step_reference(BitState::single_seed(8, 2), rule);
    EXPECT_EQ(y.to_string(), "00001000");
}

TEST(Evolve, ZeroStepsReturnsInitialState) {
    const auto x = BitState::from_string("0110");
    const auto traj = evolve(x, parse_rule(30), 0);
    ASSERT_EQ(traj.size(), 1u);
    EXPECT_EQ(traj[0], x);
}

TEST(Evolve, ComposesReferenceSteps) {
    const auto x = BitState::single_seed(33, 16);
    const auto rule = parse_rule(110);
    const auto traj = evolve(x, rule, 16);
    ASSERT_EQ(traj.size(), 17u);
    BitState cur = x;
    for (std::size_t t = 0; t <= 16; ++t) {
        EXPECT_EQ(traj[t], cur);
        cur = elementary_step_by_lookup(cur, 110);
    }
}

TEST(Evolve, IdentityRuleRepeatsState) {
    const auto x = BitState::from_string("1011001");
    const auto traj = evolve(x, parse_rule(204), 5);
    ASSERT_EQ(traj.size(), 6u);
    for (const auto& s : traj) EXPECT_EQ(s, x);
}

TEST(ApplyCirculant, IdentityMask) {
    const auto x = BitState::from_string("10110010");
    const auto y = apply_circulant(ConvolutionMask::identity(), x);
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(y[i], x[i]);
}

TEST(ApplyCirculant, AddressingMaskOnSingleSeed) {
    const auto h = apply_circulant(ConvolutionMask::addressing(NeighborhoodSpec::elementary()),
                                   BitState::from_string("00100000"));
    EXPECT_EQ(h, (std::vector<std::int64_t>{0, 1, 2, 4, 0, 0, 0, 0}));
}

TEST(ApplyCirculant, NeighborSumOnOnes) {
    const auto h = apply_circulant(ConvolutionMask({{-1, 1}, {1, 1}}), BitState::ones(9));
    EXPECT_EQ(h, std::vector<std::int64_t>(9, 2));
}

TEST(ApplyCirculant, IsLinearOnIntegerVectors) {
    std::mt19937_64 rng(3);
    const ConvolutionMask mask({{-2, 3}, {0, -1}, {1, 5}});
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 5 + rng() % 30;
        std::vector<std::int64_t> a(n), b(n), s(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = static_cast<std::int64_t>(rng() % 21) - 10;
            b[i] = static_cast<std::int64_t>(rng() % 21) - 10;
            s[i] = a[i] + b[i];
        }
        const auto ca = apply_circulant(mask, std::span<const std::int64_t>(a));
        const auto cb = apply_circulant(mask, std::span<const std::int64_t>(b));
        const auto cs = apply_circulant(mask, std::span<const std::int64_t>(s));
        for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(cs[i], ca[i] + cb[i]);
    }
}

TEST(ApplyCirculant, MatrixRealizationIsCirculant) {
    // Columns are images of unit vectors; each row is the previous one shifted.
    const ConvolutionMask mask({{-1, 4}, {0, 2}, {1, 1}});
    const std::size_t n = 7;
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = apply_circulant(mask, BitState::single_seed(n, j));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(m[i][(j + 1) % n], m[i - 1][j]);
}

TEST(RootProductPolynomial, Rule110MatchesPublishedCoefficients) {
    const auto p = polynomial_from_rule_roots(parse_rule(110));
    EXPECT_EQ(p.kind(), RulePolynomial::Kind::RootProduct);
    auto roots = p.roots();
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(roots, (std::vector<std::int64_t>{1, 3, 4, 5, 5, 7, 8, 8}));
    const auto c = p.integer_coefficients();
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(as_int64(*c),
              (std::vector<std::int64_t>{134400, -319360, 291716, -140289, 39729, -6870, 714, -41, 1}));
}

TEST(RootProductPolynomial, ConstantTermAndRootSum) {
    const auto p = polynomial_from_rule_roots(parse_rule(110));
    std::int64_t product = 1, sum = 0;
    for (auto r : p.roots()) {
        product *= r;
        sum += r;
    }
    EXPECT_EQ(product, 134400);
    EXPECT_EQ(sum, 41);
    EXPECT_EQ(p.coefficients()[7], Rational(-41));
}

TEST(RootProductPolynomial, ZeroRuleIsFallingFactorial) {
    const auto p = polynomial_from_rule_roots(parse_rule(0));
    auto roots = p.roots();
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(roots, (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(p.degree(), 8);
    for (std::int64_t z = 1; z <= 8; ++z) EXPECT_EQ(p.evaluate(z), 0);
    EXPECT_EQ(p.evaluate(9), Rational(40320));
}

TEST(RootProductPolynomial, DoesNotReproduceOneOutputs) {
    // Rule 110 has sigma_1 = 1 but the root product at z = 2 is not 1.
    const auto p = polynomial_from_rule_roots(parse_rule(110));
    EXPECT_EQ(p.evaluate(2), Rational(-3240));
}

TEST(RootProductPolynomial, WideNeighborhoodNeedsBigIntegers) {
    const auto p = polynomial_from_rule_roots(parse_rule(0, {2, 2}));
    EXPECT_EQ(p.degree(), 32);
    ASSERT_TRUE(p.integer_coefficients().has_value());
    EXPECT_GT(boost::multiprecision::abs((*p.integer_coefficients())[0]), BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST(InterpolatedPolynomial, ReproducesEveryAddress) {
    for (unsigned code : {0u, 30u, 90u, 106u, 110u, 204u, 255u}) {
        const auto rule = parse_rule(code);
        const auto p = interpolated_rule_polynomial(rule);
        EXPECT_LE(p.degree(), 7);
        for (std::int64_t m = 0; m < 8; ++m) EXPECT_EQ(p.evaluate(m + 1), rule.output(m)) << code;
    }
}

TEST(InterpolatedPolynomial, Rule110SpotValues) {
    const auto p = interpolated_rule_polynomial(parse_rule(110));
    EXPECT_EQ(p.evaluate(2), 1);
    EXPECT_EQ(p.evaluate(1), 0);
    EXPECT_EQ(p.evaluate(8), 0);
}

TEST(InterpolatedPolynomial, ZeroRuleGivesZeroPolynomial) {
    const auto p = interpolated_rule_polynomial(parse_rule(0));
    EXPECT_TRUE(p.coefficients().empty());
    EXPECT_EQ(p.degree(), -1);
}

TEST(PolynomialStep, IdentityRule) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_state(rng, 16);
        EXPECT_EQ(polynomial_step(x, parse_rule(204)), x);
    }
}

TEST(PolynomialStep, Rule110RandomStatesMatchReference) {
    std::mt19937_64 rng(12);
    const auto rule = parse_rule(110);
    const PolynomialStepper stepper(rule);
    for (int i = 0; i < 1000; ++i) {
        const auto x = random_state(rng, 64);
        ASSERT_EQ(stepper.step(x), step_reference(x, rule));
    }
}

TEST(PolynomialStep, Rule106ExhaustiveAtLength10) {
    const auto rule = parse_rule(106);
    const PolynomialStepper stepper(rule);
    for (std::uint64_t v = 0; v < 1024; ++v) {
        const auto x = BitState::from_index(v, 10);
        ASSERT_EQ(stepper.step(x), step_reference(x, rule));
    }
}

TEST(PolynomialStep, WideNeighborhoodUsesExactEvaluation) {
    std::mt19937_64 rng(13);
    const NeighborhoodSpec spec{2, 2};
    const auto rule = parse_rule(0x9E3779B9u, spec);
    const PolynomialStepper stepper(rule);
    for (int i = 0; i < 20; ++i) {
        const auto x = random_state(rng, 24);
        ASSERT_EQ(stepper.step(x), step_reference(x, rule));
    }
}

TEST(PolynomialStep, AddressOutsideRangeIsRejected) {
    const PolynomialStepper stepper(parse_rule(110));
    EXPECT_THROW(stepper.evaluate_address(0), AddressError);
    EXPECT_THROW(stepper.evaluate_address(9), AddressError);
    EXPECT_EQ(stepper.evaluate_address(2), 1);
}
