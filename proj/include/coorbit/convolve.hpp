#ifndef COORBIT_CONVOLVE_HPP
#define COORBIT_CONVOLVE_HPP

#include "coorbit/grid.hpp"
#include "coorbit/weights.hpp"

namespace coorbit {

// Linear (zero-padded FFT) convolution h * sum_j F_j G_{i-j}, returned on
// F's grid.  Circular wrap-around is never used: the group is the real
// line and wrap-around would corrupt reproducing identities near the
// window boundary.  Grids must share the spacing.
SampledFunction1D conv1d(const SampledFunction1D& F, const SampledFunction1D& G);

// Twisted convolution
//   (F . G)(x,w) = int F(x',w') G(x-x', w-w') e^{2 pi i x'(w'-w)} dx' dw'
// evaluated per output row w with hoisted row FFTs: the modulation
// e^{-2 pi i x' w} is an exact circular bin shift of the precomputed row
// spectra whenever w * h_x * M is an integer (M = padded FFT length).
// Output on F's grid; inputs must share the grid.
SampledFunction2D twisted_conv(const SampledFunction2D& F, const SampledFunction2D& G);

// O(N^4) direct-sum reference used to cross-validate twisted_conv on tiny
// grids (intended for N <= 32 per axis).
SampledFunction2D twisted_conv_direct(const SampledFunction2D& F, const SampledFunction2D& G);

struct YoungReport {
    double p = 0, q = 0, r = 0;
    double ratio = 0;                 // ||H*F||_{r,m} / (||H||_{p,m} ||F||_{q,w})
    double moderateness_constant = 1;
    bool pass = false;
    std::string weights = "const";
};

inline constexpr double kYoungTolerance = 0.05;

// PASS iff ratio <= moderateness_constant * (1 + kYoungTolerance);
// requires 1 + 1/r = 1/p + 1/q within 1e-12 and nonzero denominators.
YoungReport weighted_young_check(const SampledFunction1D& H, const SampledFunction1D& F,
                                 double p, double q, double r, const WeightPair& pair);

} // namespace coorbit

#endif
