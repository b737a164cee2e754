#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/rule.hpp"

namespace holoca {

// Integer weights on signed offsets. Induces the circulant action
// (C x)_i = sum_o w_o x_{(i+o) mod L}.
class ConvolutionMask {
public:
    ConvolutionMask() = default;
    explicit ConvolutionMask(std::map<int, std::int64_t> weights);

    static ConvolutionMask identity() { return ConvolutionMask(std::map<int, std::int64_t>{{0, 1}}); }
    static ConvolutionMask shift(int offset) { return ConvolutionMask(std::map<int, std::int64_t>{{offset, 1}}); }
    // Weights 2^(k_right - o): maps each cell to its neighborhood address.
    static ConvolutionMask addressing(NeighborhoodSpec spec);

    // Zero weights are dropped so equal masks compare equal.
    const std::map<int, std::int64_t>& weights() const noexcept { return weights_; }
    std::int64_t weight(int offset) const;
    bool empty() const noexcept { return weights_.empty(); }

    // max(offset) - min(offset) + 1, or 0 for the empty mask.
    std::size_t span() const noexcept;

    ConvolutionMask operator+(const ConvolutionMask& other) const;

    // Length-L defining vector c with C x = c (*) x (circular convolution):
    // c_j = sum of w_o over offsets with (-o) mod L == j.
    std::vector<double> defining_vector(std::size_t length) const;

    friend bool operator==(const ConvolutionMask&, const ConvolutionMask&) = default;

private:
    std::map<int, std::int64_t> weights_;
};

std::vector<std::int64_t> apply_circulant(const ConvolutionMask& mask, const BitState& x);
std::vector<std::int64_t> apply_circulant(const ConvolutionMask& mask, std::span<const std::int64_t> x);
std::vector<double> apply_circulant(const ConvolutionMask& mask, std::span<const double> x);

} // namespace holoca
