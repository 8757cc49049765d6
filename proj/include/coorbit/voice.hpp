#ifndef COORBIT_VOICE_HPP
#define COORBIT_VOICE_HPP

#include "coorbit/grid.hpp"
#include "coorbit/kernels.hpp"

namespace coorbit {

// The band-limited voice transform is the identity embedding; this just
// enforces the band precondition.
SampledFunction1D voice_shannon(const SampledFunction1D& f, const ShannonSetting& s,
                                double band_tol = 1e-6);

// Box-window short-time transform
//   U f(x, w) = sum_t f(t) g(t - x) e^{-2 pi i w (t + ht/2)} * ht,
// with g = chi_[-1/2,1/2) sampled half-open so box widths quadrature
// exactly.  Each sample is treated as its cell's average located at the
// cell center, hence the half-sample phase; without it the transform
// carries a spurious e^{i pi w ht} ramp across the frequency axis.
// The hop equals a multiple of f's spacing (x grid must align with f's
// grid); requested frequencies must stay below the Nyquist rate of f.
SampledFunction2D voice_modulation(const SampledFunction1D& f, const Grid2D& out_grid);

// || F . K - F ||_2 / ||F||_2 and the membership verdict at 1e-2
struct MembershipReport {
    double residual = 0.0;
    bool member = false;
};
MembershipReport reproducing_membership(const SampledFunction2D& F);

// Spectral factorization check for twisted-reproducing F:
//   Fhat(xi, eta) = sinc(xi) e^{2 pi i xi eta} * I(eta),
//   I(eta) = int Fhat(xi', eta) sinc(xi') e^{-2 pi i xi' eta} dxi'.
// Returns the max absolute mismatch over bins with |eta| <= 0.45 (the
// factorization degrades at the band edge eta = 1/2 purely through window
// truncation ringing).
double lem1_fourier_identity_check(const SampledFunction2D& F);

} // namespace coorbit

#endif
