#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holoca {

// Cyclic lattice of L binary cells.
class BitState {
public:
    BitState() = default;
    explicit BitState(std::size_t length);
    explicit BitState(std::vector<std::uint8_t> bits);

    // Parse "0010..." (index 0 is the first character).
    static BitState from_string(std::string_view text);
    // Bit i of `value` becomes cell i. Requires length <= 64.
    static BitState from_index(std::uint64_t value, std::size_t length);
    static BitState single_seed(std::size_t length, std::size_t index);
    static BitState ones(std::size_t length);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
    // Cyclic access with a signed index.
    std::uint8_t at_cyclic(std::ptrdiff_t i) const noexcept;
    void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
    void flip(std::size_t i) { bits_.at(i) ^= 1u; }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::size_t popcount() const noexcept;
    BitState complement() const;
    // Result cell i is this cell (i + k) mod L, i.e. a left rotation by k.
    BitState rotated(std::ptrdiff_t k) const;
    BitState operator^(const BitState& other) const;

    std::vector<double> to_real() const;
    std::string to_string() const;

    friend bool operator==(const BitState&, const BitState&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace holoca
