#include "holoca/bit_state.hpp"

#include <algorithm>

#include "holoca/error.hpp"

namespace holoca {

BitState::BitState(std::size_t length) : bits_(length, 0) {}

BitState::BitState(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw RangeError("bit-state cells must be 0 or 1");
}

BitState BitState::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw RangeError("bit-state strings may only contain '0' and '1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitState(std::move(bits));
}

BitState BitState::from_index(std::uint64_t value, std::size_t length) {
    if (length > 64) throw SizeError("from_index supports at most 64 cells");
    BitState x(length);
    for (std::size_t i = 0; i < length; ++i)
        x.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1u);
    return x;
}

BitState BitState::single_seed(std::size_t length, std::size_t index) {
    BitState x(length);
    x.set(index, true);
    return x;
}

BitState BitState::ones(std::size_t length) {
    return BitState(std::vector<std::uint8_t>(length, 1));
}

std::uint8_t BitState::at_cyclic(std::ptrdiff_t i) const noexcept {
    const auto n = static_cast<std::ptrdiff_t>(bits_.size());
    auto r = i % n;
    if (r < 0) r += n;
    return bits_[static_cast<std::size_t>(r)];
}

std::size_t BitState::popcount() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitState BitState::complement() const {
    BitState out(*this);
    for (auto& b : out.bits_) b ^= 1u;
    return out;
}

BitState BitState::rotated(std::ptrdiff_t k) const {
    BitState out(size());
    for (std::size_t i = 0; i < size(); ++i)
        out.bits_[i] = at_cyclic(static_cast<std::ptrdiff_t>(i) + k);
    return out;
}

BitState BitState::operator^(const BitState& other) const {
    if (other.size() != size()) throw SizeError("XOR of bit-states with different lengths");
    BitState out(*this);
    for (std::size_t i = 0; i < size(); ++i) out.bits_[i] ^= other.bits_[i];
    return out;
}

std::vector<double> BitState::to_real() const {
    return {bits_.begin(), bits_.end()};
}

std::string BitState::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

} // namespace holoca
