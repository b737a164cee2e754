#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace holoca {

// Binary fractal matrix from h_{n+1} = [h_n h_n; h_n 0], h_0 = [1 1; 1 0].
// Order n has side 2^(n+1); entry (nu, mu) is 1 exactly when nu AND mu == 0.
class LangletMatrix {
public:
    static constexpr int kMaxOrder = 12;

    explicit LangletMatrix(int order);

    int order() const noexcept { return order_; }
    std::size_t side() const noexcept { return side_; }
    std::uint8_t operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * side_ + col];
    }

private:
    int order_;
    std::size_t side_;
    std::vector<std::uint8_t> entries_;
};

// Builds by block recursion; throws ResourceError above kMaxOrder.
LangletMatrix langlet_matrix(int order);

} // namespace holoca
