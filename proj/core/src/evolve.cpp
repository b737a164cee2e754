#include "holoca/evolve.hpp"

#include <string>

#include "holoca/error.hpp"

namespace holoca {

std::vector<std::uint64_t> neighborhood_addresses(const BitState& x, NeighborhoodSpec spec) {
    const std::size_t n = x.size();
    if (n < static_cast<std::size_t>(spec.size()))
        throw SizeError("lattice of " + std::to_string(n) + " cells is smaller than the neighborhood (" +
                        std::to_string(spec.size()) + ")");
    std::vector<std::uint64_t> m(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t a = 0;
        for (int o = -spec.k_left; o <= spec.k_right; ++o)
            a = (a << 1) | x.at_cyclic(static_cast<std::ptrdiff_t>(i) + o);
        m[i] = a;
    }
    return m;
}

BitState step_reference(const BitState& x, const RuleTable& rule) {
    const auto m = neighborhood_addresses(x, rule.spec());
    std::vector<std::uint8_t> y(x.size());
    const auto& sigma = rule.outputs();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = sigma[m[i]];
    return BitState(std::move(y));
}

std::vector<BitState> evolve(const BitState& x, const RuleTable& rule, std::size_t steps) {
    std::vector<BitState> trajectory;
    trajectory.reserve(steps + 1);
    trajectory.push_back(x);
    for (std::size_t t = 0; t < steps; ++t) trajectory.push_back(step_reference(trajectory.back(), rule));
    return trajectory;
}

} // namespace holoca
