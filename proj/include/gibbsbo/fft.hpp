#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace gibbsbo::fft {

using Complex = std::complex<double>;

/// Smallest power of two >= minimum.
std::size_t good_size(std::size_t minimum);

/// values[j] = sum_k c_k exp(2 pi i j k / M) for a Hermitian spectrum given by
/// its non-negative half (size M/2 + 1). Unnormalised.
void half_spectrum_to_grid(std::span<const Complex> half, std::span<double> values);

/// half[k] = sum_j values[j] exp(-2 pi i j k / M), k = 0..M/2. Unnormalised.
void grid_to_half_spectrum(std::span<const double> values, std::span<Complex> half);

/// out[k] = sum_j in[j] exp(-2 pi i j k / M). Unnormalised.
void forward(std::span<const Complex> in, std::span<Complex> out);

/// out[j] = sum_k in[k] exp(2 pi i j k / M). Unnormalised.
void backward(std::span<const Complex> in, std::span<Complex> out);

}  // namespace gibbsbo::fft
