#include "holoca/langlet.hpp"

#include <string>

#include "holoca/error.hpp"

namespace holoca {

LangletMatrix::LangletMatrix(int order) : order_(order) {
    if (order < 0) throw RangeError("Langlet order must be non-negative");
    if (order > kMaxOrder)
        throw ResourceError("Langlet order " + std::to_string(order) + " exceeds the limit of " +
                            std::to_string(kMaxOrder));
    side_ = std::size_t{2} << order;
    entries_.assign(side_ * side_, 0);

    // h_0, then h_{k+1} = [h_k h_k; h_k 0] in place: the top-left block of
    // side s is copied into the top-right and bottom-left blocks.
    entries_[0] = 1;
    entries_[1] = 1;
    entries_[side_] = 1;
    for (std::size_t s = 2; s < side_; s *= 2) {
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t c = 0; c < s; ++c) {
                const auto v = entries_[r * side_ + c];
                entries_[r * side_ + c + s] = v;
                entries_[(r + s) * side_ + c] = v;
            }
    }
}

LangletMatrix langlet_matrix(int order) {
    return LangletMatrix(order);
}

} // namespace holoca
