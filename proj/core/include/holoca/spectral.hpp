#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "holoca/bit_state.hpp"
#include "holoca/circulant.hpp"
#include "holoca/fft.hpp"
#include "holoca/linearize.hpp"
#include "holoca/polynomial.hpp"
#include "holoca/projectors.hpp"
#include "holoca/rule.hpp"

namespace holoca {

// DFT image of a length-L signal (forward transform unnormalized, inverse
// carries 1/L).
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::size_t length) : values_(length) {}
    explicit Spectrum(std::vector<Complex> values) : values_(std::move(values)) {}

    // DFT of the all-ones signal, (L, 0, ..., 0).
    static Spectrum ones(std::size_t length);

    std::size_t size() const noexcept { return values_.size(); }
    const Complex& operator[](std::size_t k) const noexcept { return values_[k]; }
    Complex& operator[](std::size_t k) noexcept { return values_[k]; }
    const std::vector<Complex>& values() const noexcept { return values_; }

    Spectrum& operator+=(const Spectrum& other);
    Spectrum& operator-=(const Spectrum& other);
    Spectrum& operator*=(double scale);
    friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
    friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
    friend Spectrum operator*(double s, Spectrum a) { return a *= s; }

    // 1~ - X: the spectrum of the complement only differs in the DC bin.
    Spectrum complement() const;

    double max_abs_difference(const Spectrum& other) const;

private:
    std::vector<Complex> values_;
};

Spectrum dft(const BitState& x);
Spectrum dft(std::span<const double> x);
Spectrum dft(std::span<const Complex> x);

std::vector<Complex> idft_complex(const Spectrum& spectrum);
// Real part of the inverse transform. Throws DomainError if any imaginary
// part reaches 1e-9 L (the spectrum is not the image of a real signal).
std::vector<double> idft(const Spectrum& spectrum);

// Recovered spatial values must lie within `tolerance` of {0, 1}; they are
// then rounded. DomainError otherwise.
inline constexpr double kBitRecoveryTolerance = 1e-6;
BitState to_bit_state(const Spectrum& spectrum, double tolerance = kBitRecoveryTolerance);

// Circulant eigenvalues lambda = dft(c) of a mask's defining vector.
class EigenvalueProfile {
public:
    EigenvalueProfile(const ConvolutionMask& mask, std::size_t length);

    std::size_t size() const noexcept { return lambda_.size(); }
    const std::vector<Complex>& values() const noexcept { return lambda_; }
    const Complex& operator[](std::size_t k) const noexcept { return lambda_[k]; }

    // Componentwise lambda * X: the mask applied in the frequency domain.
    Spectrum apply(const Spectrum& x) const;

private:
    std::vector<Complex> lambda_;
};

EigenvalueProfile circulant_eigenvalues(const ConvolutionMask& mask, std::size_t length);

// (1/L) (X (*) Y), circular convolution of spectra; equals the DFT of the
// componentwise product of the underlying signals. SizeError on mismatch.
Spectrum spectral_product(const Spectrum& x, const Spectrum& y);

// Spectral image of the projector evolution. For each pattern with
// sigma_m = 1 the factor spectra lambda_o X (one bits) and 1~ - lambda_o X
// (zero bits) are chained with spectral_product, then summed.
class SpectralProjectorEngine {
public:
    SpectralProjectorEngine(const RuleTable& rule, std::size_t length);

    std::size_t length() const noexcept { return length_; }
    Spectrum step(const Spectrum& x) const;

private:
    NeighborhoodSpec spec_;
    std::size_t length_;
    std::vector<PatternProjector> active_;
    std::vector<EigenvalueProfile> shifts_; // indexed by offset + k_left
};

// Spectral image of x' = p(1 + C x) with the interpolated rule polynomial:
// H = 1~ + Lambda_addr X, then Horner evaluation with spectral_product.
class SpectralPolynomialEngine {
public:
    SpectralPolynomialEngine(const RuleTable& rule, std::size_t length);

    std::size_t length() const noexcept { return length_; }
    // DomainError if x is not the spectrum of a bit-state.
    Spectrum step(const Spectrum& x) const;

private:
    std::size_t length_;
    std::vector<double> coefficients_;
    EigenvalueProfile addressing_;
};

// Spectral image of a split form: Lambda_K X plus one correction chain per
// projector correction.
class SpectralSplitEngine {
public:
    SpectralSplitEngine(const SplitForm& split, std::size_t length);

    std::size_t length() const noexcept { return length_; }
    Spectrum linear_term(const Spectrum& x) const { return linear_.apply(x); }
    Spectrum step(const Spectrum& x) const;

private:
    NeighborhoodSpec spec_;
    std::size_t length_;
    EigenvalueProfile linear_;
    std::vector<ProjectorCorrection> corrections_;
    std::vector<EigenvalueProfile> shifts_;
};

// Chain of spectral products for one pattern; shared by the engines above.
Spectrum pattern_chain(const PatternProjector& pattern, const Spectrum& x,
                       std::span<const EigenvalueProfile> shifts);

Spectrum spectral_projector_step(const Spectrum& x, const RuleTable& rule);
Spectrum spectral_polynomial_step(const Spectrum& x, const RuleTable& rule);
Spectrum spectral_split_step(const Spectrum& x, const SplitForm& split);

} // namespace holoca
