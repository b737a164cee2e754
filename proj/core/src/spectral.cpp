#include "holoca/spectral.hpp"

#include <cmath>
#include <string>

#include "holoca/error.hpp"

namespace holoca {

namespace {

void require_same_length(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size())
        throw SizeError("spectrum lengths differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

std::vector<EigenvalueProfile> shift_profiles(NeighborhoodSpec spec, std::size_t length) {
    std::vector<EigenvalueProfile> shifts;
    for (int o = -spec.k_left; o <= spec.k_right; ++o) shifts.emplace_back(ConvolutionMask::shift(o), length);
    return shifts;
}

void require_length(std::size_t expected, const Spectrum& x) {
    if (x.size() != expected)
        throw SizeError("engine built for length " + std::to_string(expected) + ", got " + std::to_string(x.size()));
}

} // namespace

Spectrum Spectrum::ones(std::size_t length) {
    Spectrum s(length);
    if (length) s[0] = static_cast<double>(length);
    return s;
}

Spectrum& Spectrum::operator+=(const Spectrum& other) {
    require_same_length(*this, other);
    for (std::size_t k = 0; k < size(); ++k) values_[k] += other.values_[k];
    return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& other) {
    require_same_length(*this, other);
    for (std::size_t k = 0; k < size(); ++k) values_[k] -= other.values_[k];
    return *this;
}

Spectrum& Spectrum::operator*=(double scale) {
    for (auto& v : values_) v *= scale;
    return *this;
}

Spectrum Spectrum::complement() const {
    return ones(size()) - *this;
}

double Spectrum::max_abs_difference(const Spectrum& other) const {
    require_same_length(*this, other);
    double worst = 0.0;
    for (std::size_t k = 0; k < size(); ++k) worst = std::max(worst, std::abs(values_[k] - other.values_[k]));
    return worst;
}

Spectrum dft(const BitState& x) {
    const auto real = x.to_real();
    return dft(std::span<const double>(real));
}

Spectrum dft(std::span<const double> x) {
    std::vector<Complex> c(x.begin(), x.end());
    return Spectrum(forward_dft(c));
}

Spectrum dft(std::span<const Complex> x) {
    return Spectrum(forward_dft(x));
}

std::vector<Complex> idft_complex(const Spectrum& spectrum) {
    return inverse_dft(spectrum.values());
}

std::vector<double> idft(const Spectrum& spectrum) {
    const auto z = idft_complex(spectrum);
    const double limit = 1e-9 * static_cast<double>(std::max<std::size_t>(1, z.size()));
    std::vector<double> out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (std::abs(z[j].imag()) >= limit)
            throw DomainError("spectrum is not the image of a real signal (imaginary part " +
                              std::to_string(z[j].imag()) + " at cell " + std::to_string(j) + ")");
        out[j] = z[j].real();
    }
    return out;
}

BitState to_bit_state(const Spectrum& spectrum, double tolerance) {
    const auto real = idft(spectrum);
    std::vector<std::uint8_t> bits(real.size());
    for (std::size_t j = 0; j < real.size(); ++j) {
        const double r = std::round(real[j]);
        if ((r != 0.0 && r != 1.0) || std::abs(real[j] - r) > tolerance)
            throw DomainError("cell " + std::to_string(j) + " recovered as " + std::to_string(real[j]) +
                              ", not a bit");
        bits[j] = static_cast<std::uint8_t>(r);
    }
    return BitState(std::move(bits));
}

EigenvalueProfile::EigenvalueProfile(const ConvolutionMask& mask, std::size_t length)
    : lambda_(dft(std::span<const double>(mask.defining_vector(length))).values()) {}

Spectrum EigenvalueProfile::apply(const Spectrum& x) const {
    if (x.size() != lambda_.size()) throw SizeError("eigenvalue profile and spectrum lengths differ");
    Spectrum out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = lambda_[k] * x[k];
    return out;
}

EigenvalueProfile circulant_eigenvalues(const ConvolutionMask& mask, std::size_t length) {
    return EigenvalueProfile(mask, length);
}

Spectrum spectral_product(const Spectrum& x, const Spectrum& y) {
    require_same_length(x, y);
    const std::size_t n = x.size();
    Spectrum out(n);
    if (n == 0) return out;
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        // Y index (k - j) mod n, walked without a modulo per term.
        std::size_t yi = k;
        for (std::size_t j = 0; j < n; ++j) {
            acc += x[j] * y[yi];
            yi = yi == 0 ? n - 1 : yi - 1;
        }
        out[k] = acc * scale;
    }
    return out;
}

Spectrum pattern_chain(const PatternProjector& pattern, const Spectrum& x,
                       std::span<const EigenvalueProfile> shifts) {
    const auto spec = pattern.spec();
    Spectrum chain;
    bool first = true;
    for (int o = -spec.k_left; o <= spec.k_right; ++o) {
        Spectrum factor = shifts[static_cast<std::size_t>(o + spec.k_left)].apply(x);
        if (!pattern.bit(o)) factor = factor.complement();
        chain = first ? std::move(factor) : spectral_product(chain, factor);
        first = false;
    }
    return chain;
}

SpectralProjectorEngine::SpectralProjectorEngine(const RuleTable& rule, std::size_t length)
    : spec_(rule.spec()), length_(length), shifts_(shift_profiles(rule.spec(), length)) {
    if (length < static_cast<std::size_t>(spec_.size())) throw SizeError("lattice smaller than the neighborhood");
    for (std::uint64_t m = 0; m < rule.configurations(); ++m)
        if (rule.output(m)) active_.push_back(PatternProjector::from_address(spec_, m));
}

Spectrum SpectralProjectorEngine::step(const Spectrum& x) const {
    require_length(length_, x);
    Spectrum out(length_);
    for (const auto& p : active_) out += pattern_chain(p, x, shifts_);
    return out;
}

SpectralPolynomialEngine::SpectralPolynomialEngine(const RuleTable& rule, std::size_t length)
    : length_(length),
      coefficients_(interpolated_rule_polynomial(rule).coefficients_as_double()),
      addressing_(ConvolutionMask::addressing(rule.spec()), length) {
    if (length < static_cast<std::size_t>(rule.spec().size())) throw SizeError("lattice smaller than the neighborhood");
}

Spectrum SpectralPolynomialEngine::step(const Spectrum& x) const {
    require_length(length_, x);
    to_bit_state(x); // domain check only
    const Spectrum one = Spectrum::ones(length_);
    if (coefficients_.empty()) return Spectrum(length_);

    const Spectrum h = one + addressing_.apply(x);
    Spectrum acc = coefficients_.back() * one;
    for (std::size_t k = coefficients_.size() - 1; k-- > 0;) acc = spectral_product(acc, h) + coefficients_[k] * one;
    return acc;
}

SpectralSplitEngine::SpectralSplitEngine(const SplitForm& split, std::size_t length)
    : spec_(split.spec),
      length_(length),
      linear_(split.linear, length),
      corrections_(split.corrections),
      shifts_(shift_profiles(split.spec, length)) {
    if (length < static_cast<std::size_t>(spec_.size())) throw SizeError("lattice smaller than the neighborhood");
}

Spectrum SpectralSplitEngine::step(const Spectrum& x) const {
    require_length(length_, x);
    Spectrum out = linear_.apply(x);
    for (const auto& c : corrections_)
        out += static_cast<double>(c.coefficient) * pattern_chain(c.pattern, x, shifts_);
    return out;
}

Spectrum spectral_projector_step(const Spectrum& x, const RuleTable& rule) {
    return SpectralProjectorEngine(rule, x.size()).step(x);
}

Spectrum spectral_polynomial_step(const Spectrum& x, const RuleTable& rule) {
    return SpectralPolynomialEngine(rule, x.size()).step(x);
}

Spectrum spectral_split_step(const Spectrum& x, const SplitForm& split) {
    return SpectralSplitEngine(split, x.size()).step(x);
}

} // namespace holoca
