#ifndef COORBIT_KERNELS_HPP
#define COORBIT_KERNELS_HPP

#include "coorbit/grid.hpp"

namespace coorbit {

// sinc convention used throughout the library: sinc(x) = sin(pi x)/(pi x),
// sinc(0) = 1.  The derivative helpers below are the single exception and
// work on the unnormalized sin(x)/x; callers rescale by the chain rule.
// Mixing the two conventions is the classic trap here; keep them apart.
double sinc(double x);

// Band-limited setting on R with band [-omega, omega].  The natural lattice
// step for the discretization operator is 1/(2*omega); coarser grids lose
// injectivity through spectral folding.
struct ShannonSetting {
    double omega = 1.0;
    explicit ShannonSetting(double w = 1.0) : omega(w) {
        if (!(omega > 0.0)) throw std::invalid_argument("ShannonSetting: omega must be positive");
    }
    double default_tau() const { return 1.0 / (2.0 * omega); }
};

// K(b) = 2 omega sinc(2 omega b); equals the inverse Fourier transform of
// the band indicator.
double shannon_kernel_value(const ShannonSetting& s, double b);
SampledFunction1D shannon_kernel(const ShannonSetting& s, const Grid1D& grid);

// d^n/dx^n of sin(x)/x (unnormalized convention).  Closed product-rule form
//   x^{-n} sum_{k=0}^{n} (n!/k!) (-1)^{n-k} sin^{(k)}(x) x^{k-1}
// for |x| >= eps0; Taylor series of order n+8 below eps0 = 1e-3, where the
// closed form cancels catastrophically.
double sinc_derivative_unnormalized(int n, double x);

// d^n/db^n of the Shannon kernel via the chain rule.
double shannon_kernel_derivative(const ShannonSetting& s, int n, double b);

// Time-frequency setting with the unit box window; lattice Z^2 truncated to
// |k|,|l| <= R, coefficient boxes Q = (-1/2,1/2)^2.
struct ModulationSetting {
    int R = 4;
    explicit ModulationSetting(int R_ = 4) : R(R_) {
        if (R < 1) throw std::invalid_argument("ModulationSetting: R must be >= 1");
    }
};

// Reproducing kernel of the box-window transform:
//   K(x,w) = e^{-i pi x w} sin(pi (1-|x|) w) / (pi w)   for |x| <= 1,
//   K(x,0) = 1-|x|,  K = 0 for |x| > 1.
// Equivalently (1-|x|) e^{-i pi x w} sinc((1-|x|) w).  This is the windowed
// transform of the box against itself; its 2D Fourier transform is
// modulation_kernel_fourier below, and K is twisted-idempotent.
cplx modulation_kernel_value(double x, double w);
SampledFunction2D modulation_kernel(const Grid2D& grid);

// Khat(xi, eta) = chi_{[-1/2,1/2]}(eta) sinc(xi) e^{2 pi i eta xi}
cplx modulation_kernel_fourier(double xi, double eta);

// piecewise-analytic weak x-derivative; kink lines x in {-1, 0, 1} carry
// one-sided averages (measure zero, quadrature-irrelevant)
cplx modulation_kernel_x_derivative_value(double x, double w);
SampledFunction2D modulation_kernel_x_derivative(const Grid2D& grid);

// smooth w-derivative
cplx modulation_kernel_w_derivative_value(double x, double w);
SampledFunction2D modulation_kernel_w_derivative(const Grid2D& grid);

} // namespace coorbit

#endif
