#include "holoca/projectors.hpp"

#include <string>

#include "holoca/error.hpp"

namespace holoca {

PatternProjector::PatternProjector(NeighborhoodSpec spec, std::vector<std::uint8_t> bits)
    : spec_(spec), bits_(std::move(bits)) {
    validate(spec_);
    if (bits_.size() != static_cast<std::size_t>(spec_.size()))
        throw SizeError("pattern length must equal the neighborhood size");
    for (auto b : bits_)
        if (b > 1) throw RangeError("pattern bits must be 0 or 1");
}

PatternProjector PatternProjector::from_address(NeighborhoodSpec spec, std::uint64_t m) {
    validate(spec);
    if (m >= spec.configurations()) throw RangeError("pattern address out of range");
    std::vector<std::uint8_t> bits;
    for (int o = -spec.k_left; o <= spec.k_right; ++o)
        bits.push_back(static_cast<std::uint8_t>(address_bit(spec, m, o)));
    return PatternProjector(spec, std::move(bits));
}

PatternProjector PatternProjector::from_label(NeighborhoodSpec spec, std::string_view label) {
    std::vector<std::uint8_t> bits;
    for (auto it = label.rbegin(); it != label.rend(); ++it) {
        if (*it != '0' && *it != '1') throw RangeError("pattern labels contain only '0' and '1'");
        bits.push_back(static_cast<std::uint8_t>(*it - '0'));
    }
    return PatternProjector(spec, std::move(bits));
}

std::uint64_t PatternProjector::address() const noexcept {
    std::uint64_t m = 0;
    for (auto b : bits_) m = (m << 1) | b;
    return m;
}

std::string PatternProjector::tuple_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < bits_.size(); ++j) {
        if (j) s += ',';
        s += static_cast<char>('0' + bits_[j]);
    }
    return s + ")";
}

std::string PatternProjector::label() const {
    std::string s;
    for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) s += static_cast<char>('0' + *it);
    return s;
}

BitState project_pattern(const PatternProjector& p, const BitState& x) {
    const auto spec = p.spec();
    if (x.size() < static_cast<std::size_t>(spec.size())) throw SizeError("lattice smaller than the pattern");
    const BitState x_bar = x.complement();
    BitState out = BitState::ones(x.size());
    std::vector<std::uint8_t> acc(out.bits().begin(), out.bits().end());
    for (int o = -spec.k_left; o <= spec.k_right; ++o) {
        const Filter k{o};
        const BitState factor = k.apply(p.bit(o) ? x : x_bar);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] &= factor[i];
    }
    return BitState(std::move(acc));
}

BitState expand_projector_multinomial(const PatternProjector& p, const BitState& x) {
    const auto spec = p.spec();
    if (x.size() < static_cast<std::size_t>(spec.size())) throw SizeError("lattice smaller than the pattern");
    const std::size_t n = x.size();

    std::vector<int> ones;
    std::vector<int> zeros;
    for (int o = -spec.k_left; o <= spec.k_right; ++o) (p.bit(o) ? ones : zeros).push_back(o);

    std::vector<BitState> shifted;
    for (int o = -spec.k_left; o <= spec.k_right; ++o) shifted.push_back(Filter{o}.apply(x));
    auto factor = [&](int o) -> const BitState& { return shifted[static_cast<std::size_t>(o + spec.k_left)]; };

    // prod_{ones} K_o x * prod_{zeros} (1 - K_o x)
    //   = sum_{S subset of zeros} (-1)^|S| prod_{ones u S} K_o x
    std::vector<std::int64_t> total(n, 0);
    const std::size_t subsets = std::size_t{1} << zeros.size();
    for (std::size_t s = 0; s < subsets; ++s) {
        std::vector<std::int64_t> monomial(n, 1);
        int sign = 1;
        for (int o : ones)
            for (std::size_t i = 0; i < n; ++i) monomial[i] *= factor(o)[i];
        for (std::size_t j = 0; j < zeros.size(); ++j) {
            if (!((s >> j) & 1u)) continue;
            sign = -sign;
            for (std::size_t i = 0; i < n; ++i) monomial[i] *= factor(zeros[j])[i];
        }
        for (std::size_t i = 0; i < n; ++i) total[i] += sign * monomial[i];
    }

    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (total[i] != 0 && total[i] != 1) throw ConsistencyError("multinomial projector left {0, 1}");
        bits[i] = static_cast<std::uint8_t>(total[i]);
    }
    return BitState(std::move(bits));
}

std::vector<std::int64_t> resolution_of_identity(const BitState& x, NeighborhoodSpec spec) {
    std::vector<std::int64_t> sum(x.size(), 0);
    for (std::uint64_t m = 0; m < spec.configurations(); ++m) {
        const auto indicator = project_pattern(PatternProjector::from_address(spec, m), x);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += indicator[i];
    }
    return sum;
}

ProjectorEvolution::ProjectorEvolution(const RuleTable& rule) : spec_(rule.spec()) {
    for (std::uint64_t m = 0; m < rule.configurations(); ++m)
        if (rule.output(m)) active_.push_back(PatternProjector::from_address(spec_, m));
}

BitState ProjectorEvolution::step(const BitState& x) const {
    if (x.size() < static_cast<std::size_t>(spec_.size())) throw SizeError("lattice smaller than the neighborhood");
    std::vector<std::uint8_t> y(x.size(), 0);
    for (const auto& p : active_) {
        const auto indicator = project_pattern(p, x);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += indicator[i];
    }
    for (auto v : y)
        if (v > 1) throw ConsistencyError("projectors overlap");
    return BitState(std::move(y));
}

BitState evolve_via_projectors(const BitState& x, const RuleTable& rule) {
    return ProjectorEvolution(rule).step(x);
}

} // namespace holoca
