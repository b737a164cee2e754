#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/rule.hpp"

namespace holoca {

// Cyclic shift filter K_o: (K_o x)_i = x_{(i+o) mod L}.
struct Filter {
    int offset = 0;

    BitState apply(const BitState& x) const { return x.rotated(offset); }
};

// Indicator of a neighborhood pattern. Bits are stored by offset, left to
// right: bits()[0] is b_{-k_left}, the last entry is b_{+k_right}.
//
// Literature strings such as "P_110" list the pattern right to left, so the
// label "110" is the tuple (b_-1, b_0, b_+1) = (0, 1, 1). from_label/label
// convert between the two.
class PatternProjector {
public:
    PatternProjector(NeighborhoodSpec spec, std::vector<std::uint8_t> bits);

    // Pattern whose neighborhood address is m.
    static PatternProjector from_address(NeighborhoodSpec spec, std::uint64_t m);
    static PatternProjector from_label(NeighborhoodSpec spec, std::string_view label);

    NeighborhoodSpec spec() const noexcept { return spec_; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    int bit(int offset) const { return bits_.at(static_cast<std::size_t>(offset + spec_.k_left)); }
    std::uint64_t address() const noexcept;
    // Offset-ordered tuple, e.g. "(0,1,1)".
    std::string tuple_string() const;
    // Reversed-string label, e.g. "110".
    std::string label() const;

    friend bool operator==(const PatternProjector&, const PatternProjector&) = default;

private:
    NeighborhoodSpec spec_;
    std::vector<std::uint8_t> bits_;
};

// Product form: AND over offsets of K_o x (b_o = 1) or K_o x-bar (b_o = 0).
BitState project_pattern(const PatternProjector& p, const BitState& x);

// Same indicator computed over the integers by distributing every
// complement factor (1 - K_o x) into a signed sum of monomials.
BitState expand_projector_multinomial(const PatternProjector& p, const BitState& x);

// Integer sum of all 2^|N| pattern indicators; equals the all-ones vector.
std::vector<std::int64_t> resolution_of_identity(const BitState& x, NeighborhoodSpec spec);

// Projector decomposition of a rule: x' = sum_m sigma_m P_m(x). The active
// projectors are built once and reused.
class ProjectorEvolution {
public:
    explicit ProjectorEvolution(const RuleTable& rule);

    const std::vector<PatternProjector>& active_patterns() const noexcept { return active_; }
    BitState step(const BitState& x) const;

private:
    NeighborhoodSpec spec_;
    std::vector<PatternProjector> active_;
};

BitState evolve_via_projectors(const BitState& x, const RuleTable& rule);

} // namespace holoca
