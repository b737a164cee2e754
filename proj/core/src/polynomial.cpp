#include "holoca/polynomial.hpp"

#include <string>

#include "holoca/circulant.hpp"
#include "holoca/error.hpp"
#include "holoca/evolve.hpp"

namespace holoca {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

void strip_trailing_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Multiply polynomial p (ascending) by (z - root) in place.
template <typename T>
void multiply_by_linear(std::vector<T>& p, const T& root) {
    p.push_back(T{0});
    for (std::size_t k = p.size() - 1; k > 0; --k) p[k] = p[k - 1] - root * p[k];
    p[0] = -root * p[0];
}

} // namespace

RulePolynomial::RulePolynomial(Kind kind, std::vector<Rational> coefficients, std::vector<std::int64_t> roots)
    : kind_(kind), coefficients_(std::move(coefficients)), roots_(std::move(roots)) {
    strip_trailing_zeros(coefficients_);
}

Rational RulePolynomial::evaluate(const Rational& z) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::optional<std::vector<BigInt>> RulePolynomial::integer_coefficients() const {
    std::vector<BigInt> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) {
        if (denominator(c) != 1) return std::nullopt;
        out.push_back(numerator(c));
    }
    return out;
}

std::vector<double> RulePolynomial::coefficients_as_double() const {
    std::vector<double> out;
    out.reserve(coefficients_.size());
    for (const auto& c : coefficients_) out.push_back(c.convert_to<double>());
    return out;
}

RulePolynomial polynomial_from_rule_roots(const RuleTable& rule) {
    std::vector<std::int64_t> zero_roots;
    std::vector<std::int64_t> one_roots;
    for (std::size_t m = 0; m < rule.configurations(); ++m) {
        const auto address = static_cast<std::int64_t>(m) + 1;
        if (rule.output(m) == 0)
            zero_roots.push_back(address);
        else
            one_roots.push_back(address + 1);
    }
    std::vector<std::int64_t> roots = zero_roots;
    roots.insert(roots.end(), one_roots.begin(), one_roots.end());

    std::vector<BigInt> p{BigInt{1}};
    for (auto r : roots) multiply_by_linear(p, BigInt{r});
    std::vector<Rational> coefficients(p.begin(), p.end());
    return RulePolynomial(RulePolynomial::Kind::RootProduct, std::move(coefficients), std::move(roots));
}

RulePolynomial interpolated_rule_polynomial(const RuleTable& rule) {
    const std::size_t n = rule.configurations();

    // Newton divided differences on nodes z_m = m + 1.
    std::vector<Rational> dd(n);
    for (std::size_t m = 0; m < n; ++m) dd[m] = rule.output(m);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t m = n - 1; m >= level; --m)
            dd[m] = (dd[m] - dd[m - 1]) / Rational(static_cast<std::int64_t>(level));

    // Expand c_0 + (z - z_0)(c_1 + (z - z_1)(...)) into monomials.
    std::vector<Rational> p{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        multiply_by_linear(p, Rational(static_cast<std::int64_t>(k) + 1));
        p[0] += dd[k];
    }

    RulePolynomial poly(RulePolynomial::Kind::Interpolated, std::move(p));
    for (std::size_t m = 0; m < n; ++m)
        if (poly.evaluate(Rational(static_cast<std::int64_t>(m) + 1)) != rule.output(m))
            throw ConsistencyError("interpolated rule polynomial misses address " + std::to_string(m));
    return poly;
}

PolynomialStepper::PolynomialStepper(const RuleTable& rule)
    : spec_(rule.spec()), polynomial_(interpolated_rule_polynomial(rule)) {
    denominator_ = 1;
    for (const auto& c : polynomial_.coefficients())
        denominator_ = boost::multiprecision::lcm(denominator_, BigInt(denominator(c)));
    for (const auto& c : polynomial_.coefficients())
        numerators_.push_back(BigInt(numerator(c)) * (denominator_ / BigInt(denominator(c))));

    // Every Horner intermediate is bounded by sum_k |b_k| hmax^k.
    const BigInt hmax = BigInt(rule.configurations());
    const BigInt limit = BigInt(1) << 120;
    const BigInt word = BigInt(1) << 62;
    BigInt bound = 0;
    BigInt power = 1;
    bool fits = denominator_ < word;
    for (const auto& b : numerators_) {
        const BigInt mag = b < 0 ? BigInt(-b) : b;
        fits = fits && mag < word;
        bound += mag * power;
        power *= hmax;
    }
    use_int128_ = fits && bound < limit;
    if (use_int128_) {
        for (const auto& b : numerators_) numerators128_.push_back(static_cast<long long>(b));
        denominator128_ = static_cast<long long>(denominator_);
    }
}

int PolynomialStepper::evaluate_address(std::int64_t h) const {
    const auto top = static_cast<std::int64_t>(spec_.configurations());
    if (h < 1 || h > top)
        throw AddressError("address " + std::to_string(h) + " outside [1, " + std::to_string(top) + "]");

    if (use_int128_) {
        Int128 acc = 0;
        for (auto it = numerators128_.rbegin(); it != numerators128_.rend(); ++it) acc = acc * h + *it;
        if (acc == 0) return 0;
        if (acc == denominator128_) return 1;
    } else {
        BigInt acc = 0;
        for (auto it = numerators_.rbegin(); it != numerators_.rend(); ++it) acc = acc * h + *it;
        if (acc == 0) return 0;
        if (acc == denominator_) return 1;
    }
    throw ConsistencyError("rule polynomial is not a bit at address " + std::to_string(h));
}

BitState PolynomialStepper::step(const BitState& x) const {
    if (x.size() < static_cast<std::size_t>(spec_.size()))
        throw SizeError("lattice smaller than the neighborhood");
    const auto h = apply_circulant(ConvolutionMask::addressing(spec_), x);
    std::vector<std::uint8_t> y(x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<std::uint8_t>(evaluate_address(1 + h[i]));
    return BitState(std::move(y));
}

BitState polynomial_step(const BitState& x, const RuleTable& rule) {
    return PolynomialStepper(rule).step(x);
}

} // namespace holoca
