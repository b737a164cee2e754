#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holoca/bit_state.hpp"
#include "holoca/rule.hpp"

namespace holoca {

__extension__ using Int128 = __int128;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Polynomial global map of a rule, with exact rational coefficients in
// ascending degree. Two constructions are provided:
//
//  * RootProduct: monic, degree 2^|N|, whose roots are the shifted addresses
//    m+1 for zero outputs and m+2 for one outputs. Kept for its published
//    coefficients; it does not reproduce the dynamics.
//  * Interpolated: degree <= 2^|N| - 1 with p(m + 1) = sigma_m for every
//    address m. This is the one that drives polynomial_step.
class RulePolynomial {
public:
    enum class Kind { RootProduct, Interpolated };

    RulePolynomial(Kind kind, std::vector<Rational> coefficients, std::vector<std::int64_t> roots = {});

    Kind kind() const noexcept { return kind_; }
    // Trailing zero coefficients are stripped; the zero polynomial is empty.
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    const std::vector<std::int64_t>& roots() const noexcept { return roots_; }
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

    Rational evaluate(const Rational& z) const;

    // Coefficients as integers; nullopt if any coefficient is fractional.
    std::optional<std::vector<BigInt>> integer_coefficients() const;
    std::vector<double> coefficients_as_double() const;

private:
    Kind kind_;
    std::vector<Rational> coefficients_;
    std::vector<std::int64_t> roots_;
};

RulePolynomial polynomial_from_rule_roots(const RuleTable& rule);

// Exact interpolant through (m + 1, sigma_m); verified after construction.
RulePolynomial interpolated_rule_polynomial(const RuleTable& rule);

// Evaluates an interpolated rule polynomial at integer addresses using a
// common-denominator integer form, so a step costs a few integer Horner
// passes per cell instead of rational arithmetic.
class PolynomialStepper {
public:
    explicit PolynomialStepper(const RuleTable& rule);

    const RulePolynomial& polynomial() const noexcept { return polynomial_; }
    NeighborhoodSpec spec() const noexcept { return spec_; }

    // p(h) for an address h in [1, 2^|N|]; AddressError outside that range,
    // ConsistencyError if the value is not a bit.
    int evaluate_address(std::int64_t h) const;

    // x_{n+1} = p(1 + C x_n) with C the addressing mask.
    BitState step(const BitState& x) const;

private:
    NeighborhoodSpec spec_;
    RulePolynomial polynomial_;
    std::vector<BigInt> numerators_;
    BigInt denominator_;
    // Fast path when every Horner intermediate fits in 128 bits.
    bool use_int128_ = false;
    std::vector<Int128> numerators128_;
    Int128 denominator128_ = 1;
};

BitState polynomial_step(const BitState& x, const RuleTable& rule);

} // namespace holoca
