#include "coorbit/voice.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbit/convolve.hpp"
#include "coorbit/discretize.hpp"
#include "coorbit/fft.hpp"
#include "coorbit/parallel.hpp"
#include "coorbit/sampling.hpp"

namespace coorbit {

SampledFunction1D voice_shannon(const SampledFunction1D& f, const ShannonSetting& s,
                                double band_tol) {
    const double frac = out_of_band_fraction(f, s.omega);
    if (frac > band_tol) throw OutOfBandError(frac);
    return f;
}

SampledFunction2D voice_modulation(const SampledFunction1D& f, const Grid2D& out_grid) {
    const double ht = f.grid.h;
    const double nyquist = 0.5 / ht;
    const double wmax = std::max(std::abs(out_grid.w.origin), std::abs(out_grid.w.end()));
    if (wmax > nyquist)
        throw std::invalid_argument("voice_modulation: requested frequencies exceed the sample rate");
    // hop must sit on f's grid
    const double ratio = out_grid.x.h / ht;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 || !f.grid.aligned(out_grid.x.origin))
        throw std::invalid_argument("voice_modulation: output x grid not aligned with f");

    SampledFunction2D out(out_grid);
    parallel_for(out_grid.x.n, [&](std::size_t ix) {
        const double x = out_grid.x.point(ix);
        // window support [x - 1/2, x + 1/2)
        const auto lo = static_cast<long long>(
            std::ceil((x - 0.5 - f.grid.origin) / ht - 1e-9));
        const auto hi = static_cast<long long>(
            std::floor((x + 0.5 - f.grid.origin) / ht - 1e-9));  // strict right edge
        const long long a = std::max(0LL, lo);
        const long long b = std::min(static_cast<long long>(f.grid.n) - 1, hi);
        for (std::size_t jw = 0; jw < out_grid.w.n; ++jw) {
            const double w = out_grid.w.point(jw);
            cplx acc(0.0);
            for (long long t = a; t <= b; ++t) {
                const double tc = f.grid.point(static_cast<std::size_t>(t)) + 0.5 * ht;
                const double ph = -2.0 * M_PI * w * tc;
                acc += f.values[static_cast<std::size_t>(t)] * cplx(std::cos(ph), std::sin(ph));
            }
            out.at(ix, jw) = acc * ht;
        }
    });
    return out;
}

MembershipReport reproducing_membership(const SampledFunction2D& F) {
    MembershipReport rep;
    double den = 0.0;
    for (const auto& v : F.values) den += std::norm(v);
    if (den == 0.0) {
        rep.residual = 0.0;
        rep.member = true;
        return rep;
    }
    const auto K = modulation_kernel(F.grid);
    const auto FK = twisted_conv(F, K);
    double num = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) num += std::norm(FK.values[i] - F.values[i]);
    rep.residual = std::sqrt(num / den);
    rep.member = rep.residual < 1e-2;
    return rep;
}

double lem1_fourier_identity_check(const SampledFunction2D& F) {
    const std::size_t nx = F.grid.x.n, nw = F.grid.w.n;
    // continuum-scaled 2D spectrum
    std::vector<cplx> spec = F.values;
    fft2(spec, nx, nw, -1);
    const auto xi = fft_freqs(nx, F.grid.x.h);
    const auto eta = fft_freqs(nw, F.grid.w.h);
    const double cell = F.grid.x.h * F.grid.w.h;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nw; ++j) {
            const double ph = -2.0 * M_PI * (xi[i] * F.grid.x.origin + eta[j] * F.grid.w.origin);
            spec[i * nw + j] *= cell * cplx(std::cos(ph), std::sin(ph));
        }
    }
    // I(eta) = sum_xi Fhat(xi, eta) sinc(xi) e^{-2 pi i xi eta} * dxi
    const double dxi = 1.0 / (static_cast<double>(nx) * F.grid.x.h);
    std::vector<cplx> I(nw, cplx(0.0));
    for (std::size_t j = 0; j < nw; ++j) {
        cplx acc(0.0);
        for (std::size_t i = 0; i < nx; ++i) {
            const double ph = -2.0 * M_PI * xi[i] * eta[j];
            acc += spec[i * nw + j] * sinc(xi[i]) * cplx(std::cos(ph), std::sin(ph));
        }
        I[j] = acc * dxi;
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < nw; ++j) {
        if (std::abs(eta[j]) > 0.45) continue;
        for (std::size_t i = 0; i < nx; ++i) {
            const double ph = 2.0 * M_PI * xi[i] * eta[j];
            const cplx rhs = sinc(xi[i]) * cplx(std::cos(ph), std::sin(ph)) * I[j];
            worst = std::max(worst, std::abs(spec[i * nw + j] - rhs));
        }
    }
    return worst;
}

} // namespace coorbit
