#pragma once

#include <complex>
#include <span>
#include <vector>

namespace holoca {

using Complex = std::complex<double>;

// X_k = sum_j x_j exp(-2 pi i j k / L), unnormalized.
std::vector<Complex> forward_dft(std::span<const Complex> x);
// x_j = (1/L) sum_k X_k exp(+2 pi i j k / L).
std::vector<Complex> inverse_dft(std::span<const Complex> spectrum);

// Version string of the FFT backend.
const char* fft_backend_version();

} // namespace holoca
