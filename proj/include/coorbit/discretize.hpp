#ifndef COORBIT_DISCRETIZE_HPP
#define COORBIT_DISCRETIZE_HPP

#include <vector>

#include "coorbit/grid.hpp"
#include "coorbit/kernels.hpp"
#include "coorbit/pou.hpp"
#include "coorbit/weights.hpp"

namespace coorbit {

// Lattice-indexed coefficients <F, phi_k>, k in [k_min, k_max].
struct CoefficientSequence {
    double tau = 0.5;
    long long k_min = 0;
    std::vector<cplx> values;

    long long k_max() const { return k_min + static_cast<long long>(values.size()) - 1; }
    double center(std::size_t i) const {
        return tau * static_cast<double>(k_min + static_cast<long long>(i));
    }
    // weighted little-lp norm: (sum |m(g_k) c_k|^p)^{1/p}
    double lp_norm(double p, const Weight& m) const;
};

struct Coefficients2D {
    long long kx_min = 0, kw_min = 0;
    std::size_t nx = 0, nw = 0;             // lattice extents
    std::vector<cplx> values;               // row-major over (kx, kw)
    cplx at(long long kx, long long kw) const {
        return values[static_cast<std::size_t>(kx - kx_min) * nw +
                      static_cast<std::size_t>(kw - kw_min)];
    }
};

// c_k = <F, phi_k> by rectangle-rule quadrature over the hat supports.
CoefficientSequence coefficients(const SampledFunction1D& F, const PartitionOfUnity1D& pou);

// box integrals <F, phi_kl>
Coefficients2D coefficients_2d(const SampledFunction2D& F, const PartitionOfUnity2D& pou);

// J F = sum_k <F, phi_k> K(. - g_k) on F's grid.  The kernel must be
// sampled on a grid that contains every translate's evaluation range
// (for a centered window of halfwidth L, a kernel window of halfwidth 2L),
// so atom tails are never clipped.
SampledFunction1D j_phi_apply(const SampledFunction1D& F, const PartitionOfUnity1D& pou,
                              const SampledFunction1D& kernel_samples);

// lattice sum of translates of a sampled profile against given coefficients
SampledFunction1D lattice_sum(const CoefficientSequence& c, const SampledFunction1D& profile,
                              const Grid1D& out_grid);

struct OutOfBandError : std::runtime_error {
    double fraction;
    explicit OutOfBandError(double f)
        : std::runtime_error("input carries out-of-band energy fraction " + std::to_string(f)),
          fraction(f) {}
};

// Fourier-multiplier left inverse of the discretization operator at the
// dense lattice tau = 1/(2 omega):
//   recovered = Finv[ (2 omega phihat(xi))^{-1} chi_[-omega,omega] Ghat ].
// phihat(xi) = tau sinc^2(tau xi) is strictly positive on the band (its
// zeros start at 1/tau = 2 omega), so the reciprocal is safe.  The input
// must be band-limited: out-of-band energy above band_tol raises
// OutOfBandError (use project_band to precondition).  Applied by zero
// padding to twice the window, never circularly.
SampledFunction1D shannon_left_inverse(const SampledFunction1D& G, const ShannonSetting& s,
                                       double band_tol = 1e-6);

// multiplier value (2 omega phihat(xi))^{-1} on the band, 0 outside
double left_inverse_multiplier(const ShannonSetting& s, double xi);

struct BoundReport {
    double t = 0, epsilon = 0;
    double numeric = 0;   // || Finv[(chi |phihat|)^{-2}] ||_{L_t}^t by wide-window FFT
    double analytic = 0;  // 2 eps (w^3 pi^4/2)^t + 2 (w^2 pi^2/2 + 2 w C/pi)^t eps^{1-t}/(t-1)
    double C = 0;         // sup_band |Re(phihat' conj(phihat))| / |phihat|^4
    bool pass = false;
};

BoundReport multiplier_lt_bound(double t, double epsilon, const ShannonSetting& s);

struct InjectivityCertificate {
    std::string setting;      // "shannon" or "modulation"
    double tau = 0;           // lattice step (1D) or 1 (2D unit lattice)
    int lattice_radius = 0;   // R
    std::size_t rows = 0, cols = 0;
    double sigma_min = 0, sigma_max = 0;
    double grid_h = 0;
    double window = 0;
    double tolerance = 0;
};

// Smallest singular value of the map (band spectrum) -> (hat coefficients):
// the band [-omega, omega] is split into band_dim cells represented by
// their midpoints, and row k carries sqrt(dxi) phihat(xi_j) e^{2 pi i g_k xi_j}.
// At tau = 1/(2 omega) the phases separate the cells; at tau = 1/omega the
// band folds onto itself and whole column pairs collide (sigma_min ~ 0).
InjectivityCertificate injectivity_certificate_shannon(const ShannonSetting& s, double tau,
                                                       std::size_t band_dim,
                                                       double lattice_halfwidth = 64.0);

// Smallest singular value of the coefficient map restricted to the span of
// twisted translates of the kernel at centers |a|,|b| <= basis_radius,
// orthonormalized on the window.  Throws if the raw translate family is
// numerically rank-deficient (condition > 1e8).
InjectivityCertificate injectivity_certificate_modulation(const ModulationSetting& s,
                                                          int basis_radius = 2,
                                                          double grid_h = 1.0 / 32,
                                                          double w_halfwidth = 16.0);

// twisted translate by (a, b): e^{i pi a b} e^{-2 pi i a w} F(x-a, w-b)
SampledFunction2D twisted_translate(const SampledFunction2D& F, double a, double b);

} // namespace coorbit

#endif
