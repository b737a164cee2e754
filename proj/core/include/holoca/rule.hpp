#pragma once

#include <cstdint>
#include <vector>

namespace holoca {

// Neighborhood radii: k_left cells to the left, k_right to the right.
struct NeighborhoodSpec {
    int k_left = 1;
    int k_right = 1;

    constexpr int size() const noexcept { return k_left + 1 + k_right; }
    // Number of distinct neighborhood configurations, 2^|N|.
    constexpr std::size_t configurations() const noexcept {
        return std::size_t{1} << size();
    }

    static constexpr NeighborhoodSpec elementary() noexcept { return {1, 1}; }

    friend constexpr bool operator==(NeighborhoodSpec, NeighborhoodSpec) = default;
};

// Largest |N| the library accepts (rule tables with 2^32 entries).
inline constexpr int kMaxNeighborhoodSize = 5;

void validate(NeighborhoodSpec spec);

// Weight of offset o in the neighborhood address m = sum_o 2^(k_right - o) x_{i+o}.
// The leftmost cell is the most significant bit.
constexpr std::uint64_t address_weight(NeighborhoodSpec spec, int offset) noexcept {
    return std::uint64_t{1} << (spec.k_right - offset);
}

// Bit of neighborhood address m that belongs to the cell at `offset`.
constexpr int address_bit(NeighborhoodSpec spec, std::uint64_t m, int offset) noexcept {
    return static_cast<int>((m >> (spec.k_right - offset)) & 1u);
}

// Center-cell value for address m.
constexpr int center_bit(NeighborhoodSpec spec, std::uint64_t m) noexcept {
    return address_bit(spec, m, 0);
}

// A 1D binary CA rule: output bit sigma_m for each neighborhood address m.
class RuleTable {
public:
    RuleTable(NeighborhoodSpec spec, std::vector<std::uint8_t> outputs);

    NeighborhoodSpec spec() const noexcept { return spec_; }
    const std::vector<std::uint8_t>& outputs() const noexcept { return outputs_; }
    int output(std::size_t m) const { return outputs_.at(m); }
    std::size_t configurations() const noexcept { return outputs_.size(); }

    // Rule code reconstructed from the outputs (LSB first). Only defined
    // when 2^|N| <= 64.
    std::uint64_t code() const;

    bool is_elementary() const noexcept { return spec_ == NeighborhoodSpec::elementary(); }

    friend bool operator==(const RuleTable&, const RuleTable&) = default;

private:
    NeighborhoodSpec spec_;
    std::vector<std::uint8_t> outputs_;
};

// Expand a Wolfram-style code into its output table, sigma_m = bit m of code.
// Throws RangeError when code >= 2^(2^|N|).
RuleTable parse_rule(std::uint64_t code, NeighborhoodSpec spec = NeighborhoodSpec::elementary());

inline constexpr std::uint64_t kIdentityRule = 204;

} // namespace holoca
