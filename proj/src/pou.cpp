#include "coorbit/pou.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbit/kernels.hpp"

namespace coorbit {

double PartitionOfUnity1D::profile_hat(double xi) const {
    const double s = sinc(tau * xi);
    return tau * s * s;
}

double PartitionOfUnity1D::partition_sum(double x) const {
    double acc = 0.0;
    // only the two neighbouring bumps can be active
    const auto k0 = static_cast<long long>(std::floor(x / tau));
    for (long long k = k0 - 1; k <= k0 + 2; ++k)
        if (k >= k_min && k <= k_max) acc += profile(x - center(k));
    return acc;
}

PartitionOfUnity1D make_pou_1d(double tau, const Grid1D& window) {
    if (!(tau > 0.0)) throw std::invalid_argument("make_pou_1d: tau must be positive");
    if (tau < 2.0 * window.h - 1e-12)
        throw std::invalid_argument("make_pou_1d: tau too small for grid (need tau >= 2h)");
    PartitionOfUnity1D p;
    p.tau = tau;
    p.window = window;
    const double eps = 1e-9 * tau;
    p.k_min = static_cast<long long>(std::ceil((window.origin + tau - eps) / tau));
    p.k_max = static_cast<long long>(std::floor((window.end() - tau + eps) / tau));
    if (p.k_max < p.k_min) throw std::invalid_argument("make_pou_1d: window too small for tau");
    return p;
}

double PartitionOfUnity2D::partition_sum(double x, double w) const {
    const auto kx = std::llround(x);
    const auto kw = std::llround(w);
    double acc = 0.0;
    for (long long a = kx - 1; a <= kx + 1; ++a)
        for (long long b = kw - 1; b <= kw + 1; ++b)
            if (a >= kx_min && a <= kx_max && b >= kw_min && b <= kw_max)
                acc += profile(x - static_cast<double>(a), w - static_cast<double>(b));
    return acc;
}

PartitionOfUnity2D make_pou_2d(const Grid2D& window) {
    auto divides_half = [](double h) {
        const double r = 0.5 / h;
        return std::abs(r - std::round(r)) < 1e-9;
    };
    if (!divides_half(window.x.h) || !divides_half(window.w.h))
        throw std::invalid_argument("make_pou_2d: grid spacings must divide 1/2");
    PartitionOfUnity2D p;
    p.window = window;
    const double eps = 1e-9;
    p.kx_min = static_cast<long long>(std::ceil(window.x.origin + 0.5 - eps));
    p.kx_max = static_cast<long long>(std::floor(window.x.end() - 0.5 + eps));
    p.kw_min = static_cast<long long>(std::ceil(window.w.origin + 0.5 - eps));
    p.kw_max = static_cast<long long>(std::floor(window.w.end() - 0.5 + eps));
    if (p.kx_max < p.kx_min || p.kw_max < p.kw_min)
        throw std::invalid_argument("make_pou_2d: window too small");
    return p;
}

bool q_density_check(double lattice_step, double q_halfwidth, const Grid1D& window) {
    for (std::size_t i = 0; i < window.n; ++i) {
        const double x = window.point(i);
        const double nearest = std::round(x / lattice_step) * lattice_step;
        if (std::abs(x - nearest) > q_halfwidth + 1e-12) return false;
    }
    return true;
}

bool q_density_check(double step_x, double step_w, double q_half_x, double q_half_w,
                     const Grid2D& window) {
    Grid1D gx = window.x, gw = window.w;
    return q_density_check(step_x, q_half_x, gx) && q_density_check(step_w, q_half_w, gw);
}

} // namespace coorbit
