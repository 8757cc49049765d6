#ifndef COORBIT_FFT_HPP
#define COORBIT_FFT_HPP

#include <complex>
#include <vector>

#include "coorbit/grid.hpp"

namespace coorbit {

// In-place complex DFT, unnormalized:
//   sign = -1 (forward):  X_b = sum_j x_j e^{-2*pi*i*b*j/n}
//   sign = +1 (backward): scaled by 1/n here, so fft(ifft(x)) == x.
// Plan creation is serialized internally; execution is thread-safe.
void fft(std::vector<cplx>& data, int sign);

// 2D transform on row-major data (n0 rows of length n1), same conventions.
void fft2(std::vector<cplx>& data, std::size_t n0, std::size_t n1, int sign);

// DFT sample frequencies for n points at spacing h, in FFT bin order:
// 0, 1/(n h), ..., then the negative half.
std::vector<double> fft_freqs(std::size_t n, double h);

// Continuum-scaled spectrum on the grid's FFT bins:
//   spec[b] ~ Fhat(xi_b) = h * sum_j f(x_j) e^{-2 pi i xi_b x_j}
// (the grid origin enters as a phase).  from_spectrum inverts it.
std::vector<cplx> spectrum(const SampledFunction1D& f);
SampledFunction1D from_spectrum(const Grid1D& grid, std::vector<cplx> spec);

std::size_t next_pow2(std::size_t n);

} // namespace coorbit

#endif
