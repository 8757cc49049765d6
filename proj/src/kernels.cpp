#include "coorbit/kernels.hpp"

#include <cmath>

namespace coorbit {

double sinc(double x) {
    const double u = M_PI * x;
    if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
    return std::sin(u) / u;
}

double shannon_kernel_value(const ShannonSetting& s, double b) {
    return 2.0 * s.omega * sinc(2.0 * s.omega * b);
}

SampledFunction1D shannon_kernel(const ShannonSetting& s, const Grid1D& grid) {
    return SampledFunction1D::sample(grid, [&](double b) { return shannon_kernel_value(s, b); });
}

namespace {
constexpr double kTaylorRadius = 1e-3;

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
} // namespace

double sinc_derivative_unnormalized(int n, double x) {
    if (n < 0) throw std::invalid_argument("sinc_derivative_unnormalized: n must be >= 0");
    // cancellation in the closed form grows like n!/x^{n+1}, so the series
    // radius has to widen with the order
    const double radius = std::max(kTaylorRadius, 0.1 * n);
    if (std::abs(x) < radius) {
        // g(x) = sum_m (-1)^m x^{2m} / (2m+1)!  differentiated termwise;
        // keep terms through order n+8.
        double acc = 0.0;
        for (int m = (n + 1) / 2; 2 * m - n <= n + 8; ++m) {
            const int e = 2 * m - n;
            double term = 1.0 / ((2.0 * m + 1.0) * factorial(e));
            if (m % 2 != 0) term = -term;
            acc += term * std::pow(x, e);
        }
        return acc;
    }
    // x^{-n} sum_k (n!/k!) (-1)^{n-k} sin^{(k)}(x) x^{k-1},
    // sin^{(k)}(x) = sin(x + k pi/2)
    const double nfac = factorial(n);
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        double term = nfac / factorial(k) * std::sin(x + 0.5 * M_PI * k) * std::pow(x, k - 1);
        if ((n - k) % 2 != 0) term = -term;
        acc += term;
    }
    return acc * std::pow(x, -n);
}

double shannon_kernel_derivative(const ShannonSetting& s, int n, double b) {
    const double c = 2.0 * M_PI * s.omega;
    return 2.0 * s.omega * std::pow(c, n) * sinc_derivative_unnormalized(n, c * b);
}

namespace {

// sin(pi a w)/(pi w) with the w -> 0 limit a; a >= 0
double mod_core(double a, double w) {
    const double u = M_PI * a * w;
    if (std::abs(u) < 1e-4) {
        const double u2 = u * u;
        return a * (1.0 - u2 / 6.0 + u2 * u2 / 120.0);
    }
    return std::sin(u) / (M_PI * w);
}

// d/dw of mod_core
double mod_core_dw(double a, double w) {
    if (std::abs(w) < 1e-4) {
        const double a3 = a * a * a;
        return -a3 * M_PI * M_PI * w / 3.0;
    }
    const double u = M_PI * a * w;
    return (u * std::cos(u) - std::sin(u)) / (M_PI * w * w);
}

cplx unit_phase(double arg) { return cplx(std::cos(arg), std::sin(arg)); }

} // namespace

cplx modulation_kernel_value(double x, double w) {
    const double a = 1.0 - std::abs(x);
    if (a <= 0.0) return cplx(0.0);
    return unit_phase(-M_PI * x * w) * mod_core(a, w);
}

SampledFunction2D modulation_kernel(const Grid2D& grid) {
    return SampledFunction2D::sample(grid, modulation_kernel_value);
}

cplx modulation_kernel_fourier(double xi, double eta) {
    if (std::abs(eta) > 0.5) return cplx(0.0);
    return sinc(xi) * unit_phase(2.0 * M_PI * eta * xi);
}

cplx modulation_kernel_x_derivative_value(double x, double w) {
    const double a = 1.0 - std::abs(x);
    if (a < 0.0) return cplx(0.0);
    const cplx ph = unit_phase(-M_PI * x * w);
    const cplx smooth = cplx(0.0, M_PI * w) * mod_core(a, w);
    if (a == 0.0) {
        // support endpoint: one-sided average of the jump
        const double sgn = (x > 0.0) ? 1.0 : -1.0;
        return -0.5 * ph * (smooth + sgn * std::cos(M_PI * a * w));
    }
    if (x == 0.0) {
        // kink at the center: the +-cos parts cancel in the one-sided average
        return -ph * smooth;
    }
    const double sgn = (x > 0.0) ? 1.0 : -1.0;
    return -ph * (smooth + sgn * std::cos(M_PI * a * w));
}

SampledFunction2D modulation_kernel_x_derivative(const Grid2D& grid) {
    return SampledFunction2D::sample(grid, modulation_kernel_x_derivative_value);
}

cplx modulation_kernel_w_derivative_value(double x, double w) {
    const double a = 1.0 - std::abs(x);
    if (a <= 0.0) return cplx(0.0);
    const cplx ph = unit_phase(-M_PI * x * w);
    return ph * (cplx(0.0, -M_PI * x) * mod_core(a, w) + mod_core_dw(a, w));
}

SampledFunction2D modulation_kernel_w_derivative(const Grid2D& grid) {
    return SampledFunction2D::sample(grid, modulation_kernel_w_derivative_value);
}

} // namespace coorbit
