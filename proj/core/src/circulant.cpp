#include "holoca/circulant.hpp"

#include "holoca/error.hpp"

namespace holoca {

namespace {

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    const auto sn = static_cast<std::ptrdiff_t>(n);
    auto r = i % sn;
    return static_cast<std::size_t>(r < 0 ? r + sn : r);
}

template <typename T, typename Get>
std::vector<T> circulant_apply(const ConvolutionMask& mask, std::size_t n, Get get) {
    std::vector<T> out(n, T{});
    if (n == 0) return out;
    for (const auto& [offset, w] : mask.weights())
        for (std::size_t i = 0; i < n; ++i)
            out[i] += static_cast<T>(w) * get(wrap(static_cast<std::ptrdiff_t>(i) + offset, n));
    return out;
}

} // namespace

ConvolutionMask::ConvolutionMask(std::map<int, std::int64_t> weights) {
    for (const auto& [o, w] : weights)
        if (w != 0) weights_.emplace(o, w);
}

ConvolutionMask ConvolutionMask::addressing(NeighborhoodSpec spec) {
    validate(spec);
    std::map<int, std::int64_t> w;
    for (int o = -spec.k_left; o <= spec.k_right; ++o)
        w[o] = static_cast<std::int64_t>(address_weight(spec, o));
    return ConvolutionMask(std::move(w));
}

std::int64_t ConvolutionMask::weight(int offset) const {
    auto it = weights_.find(offset);
    return it == weights_.end() ? 0 : it->second;
}

std::size_t ConvolutionMask::span() const noexcept {
    if (weights_.empty()) return 0;
    return static_cast<std::size_t>(weights_.rbegin()->first - weights_.begin()->first + 1);
}

ConvolutionMask ConvolutionMask::operator+(const ConvolutionMask& other) const {
    auto sum = weights_;
    for (const auto& [o, w] : other.weights_) sum[o] += w;
    return ConvolutionMask(std::move(sum));
}

std::vector<double> ConvolutionMask::defining_vector(std::size_t length) const {
    if (length == 0) throw SizeError("defining vector needs a positive length");
    std::vector<double> c(length, 0.0);
    for (const auto& [o, w] : weights_) c[wrap(-o, length)] += static_cast<double>(w);
    return c;
}

std::vector<std::int64_t> apply_circulant(const ConvolutionMask& mask, const BitState& x) {
    return circulant_apply<std::int64_t>(mask, x.size(), [&](std::size_t j) { return std::int64_t{x[j]}; });
}

std::vector<std::int64_t> apply_circulant(const ConvolutionMask& mask, std::span<const std::int64_t> x) {
    return circulant_apply<std::int64_t>(mask, x.size(), [&](std::size_t j) { return x[j]; });
}

std::vector<double> apply_circulant(const ConvolutionMask& mask, std::span<const double> x) {
    return circulant_apply<double>(mask, x.size(), [&](std::size_t j) { return x[j]; });
}

} // namespace holoca
