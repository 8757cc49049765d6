#ifndef COORBIT_POU_HPP
#define COORBIT_POU_HPP

#include <vector>

#include "coorbit/grid.hpp"

namespace coorbit {

// B-spline partition of unity on the lattice g_k = tau*k.  The profile is
// the normalized centered hat
//   phi_tau(x) = max(0, 1 - |x|/tau)      (= (1/tau) chi_tau * chi_tau),
// Fourier transform tau * sinc^2(tau xi).  Centers are restricted to hats
// whose support [g_k - tau, g_k + tau] lies inside the window, so
// sum_k phi_k = 1 exactly on the window shrunk by tau and no clipped
// half-hats pollute boundary coefficients.
struct PartitionOfUnity1D {
    double tau = 0.5;
    long long k_min = 0, k_max = -1;
    Grid1D window;

    std::size_t count() const { return static_cast<std::size_t>(k_max - k_min + 1); }
    double center(long long k) const { return tau * static_cast<double>(k); }
    double profile(double x) const {
        const double t = 1.0 - std::abs(x) / tau;
        return t > 0.0 ? t : 0.0;
    }
    double profile_hat(double xi) const;   // tau sinc^2(tau xi)
    double partition_sum(double x) const;  // sum of all member bumps at x
};

PartitionOfUnity1D make_pou_1d(double tau, const Grid1D& window);

// Tensor-product unit-box partition on Z^2.  Boxes are half-open
// [k-1/2, k+1/2) x [l-1/2, l+1/2) so the partition sum is exactly 1 at
// every grid point (box boundaries carry no double counting).
struct PartitionOfUnity2D {
    long long kx_min = 0, kx_max = -1;
    long long kw_min = 0, kw_max = -1;
    Grid2D window;

    std::size_t count() const {
        return static_cast<std::size_t>((kx_max - kx_min + 1) * (kw_max - kw_min + 1));
    }
    static double profile(double x, double w) {
        return (x >= -0.5 && x < 0.5 && w >= -0.5 && w < 0.5) ? 1.0 : 0.0;
    }
    double partition_sum(double x, double w) const;
};

PartitionOfUnity2D make_pou_2d(const Grid2D& window);

// True iff every grid point of the window lies within q_halfwidth (closed
// box) of some lattice point step*k.
bool q_density_check(double lattice_step, double q_halfwidth, const Grid1D& window);
bool q_density_check(double step_x, double step_w, double q_half_x, double q_half_w,
                     const Grid2D& window);

} // namespace coorbit

#endif
