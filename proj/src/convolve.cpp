#include "coorbit/convolve.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbit/fft.hpp"
#include "coorbit/parallel.hpp"
#include "coorbit/sampling.hpp"

namespace coorbit {

SampledFunction1D conv1d(const SampledFunction1D& F, const SampledFunction1D& G) {
    if (std::abs(F.grid.h - G.grid.h) > 1e-12 * F.grid.h)
        throw std::invalid_argument("conv1d: spacing mismatch");
    const std::size_t n = F.grid.n, m = G.grid.n;
    const std::size_t len = next_pow2(n + m);
    std::vector<cplx> a(len, cplx(0.0)), b(len, cplx(0.0));
    std::copy(F.values.begin(), F.values.end(), a.begin());
    std::copy(G.values.begin(), G.values.end(), b.begin());
    fft(a, -1);
    fft(b, -1);
    for (std::size_t i = 0; i < len; ++i) a[i] *= b[i];
    fft(a, +1);
    // full-conv index j sits at coordinate F.origin + G.origin + j*h;
    // extract the samples matching F's grid
    const double off = (F.grid.origin - (F.grid.origin + G.grid.origin)) / F.grid.h;
    const auto j0 = std::llround(off);
    if (std::abs(off - static_cast<double>(j0)) > 1e-6 || j0 < 0 ||
        static_cast<std::size_t>(j0) + n > len)
        throw std::invalid_argument("conv1d: grids do not align on a common lattice");
    SampledFunction1D out(F.grid);
    for (std::size_t i = 0; i < n; ++i)
        out.values[i] = a[static_cast<std::size_t>(j0) + i] * F.grid.h;
    return out;
}

namespace {

long long exact_int(double v, const char* who) {
    const auto r = std::llround(v);
    if (std::abs(v - static_cast<double>(r)) > 1e-6)
        throw std::invalid_argument(std::string(who) + ": grid not twist-alignable");
    return r;
}

} // namespace

SampledFunction2D twisted_conv(const SampledFunction2D& F, const SampledFunction2D& G) {
    if (!(F.grid == G.grid)) throw std::invalid_argument("twisted_conv: grid mismatch");
    const auto& gx = F.grid.x;
    const auto& gw = F.grid.w;
    const std::size_t nx = gx.n, nw = gw.n;

    // padded x-FFT length: big enough for linear convolution and making
    // every output frequency w an integer number of FFT bins
    const double denom = 1.0 / (gx.h * gw.h);
    const auto D = exact_int(denom, "twisted_conv");
    std::size_t M = static_cast<std::size_t>(D);
    while (M < 2 * nx) M += static_cast<std::size_t>(D);
    exact_int(gw.origin * gx.h * static_cast<double>(M), "twisted_conv");

    // A(x',w') = F(x',w') e^{2 pi i x' w'}; row spectra of A and G, padded
    std::vector<cplx> Af(nw * M, cplx(0.0)), Gf(nw * M, cplx(0.0));
    {
        std::vector<cplx> row(M);
        for (std::size_t j = 0; j < nw; ++j) {
            const double w = gw.point(j);
            std::fill(row.begin(), row.end(), cplx(0.0));
            for (std::size_t i = 0; i < nx; ++i) {
                const double ph = 2.0 * M_PI * gx.point(i) * w;
                row[i] = F.at(i, j) * cplx(std::cos(ph), std::sin(ph));
            }
            fft(row, -1);
            std::copy(row.begin(), row.end(), Af.begin() + static_cast<long>(j * M));
            std::fill(row.begin(), row.end(), cplx(0.0));
            for (std::size_t i = 0; i < nx; ++i) row[i] = G.at(i, j);
            fft(row, -1);
            std::copy(row.begin(), row.end(), Gf.begin() + static_cast<long>(j * M));
        }
    }

    // full-conv sample j0 + i corresponds to x-position gx.origin + i h
    const auto j0 = exact_int(-gx.origin / gx.h, "twisted_conv");
    if (j0 < 0 || static_cast<std::size_t>(j0) + nx > M)
        throw std::invalid_argument("twisted_conv: window not centered enough for padding");

    SampledFunction2D out(F.grid);
    const double cell = gx.h * gw.h;
    parallel_for(nw, [&](std::size_t m) {
        const double wout = gw.point(m);
        const auto shift = std::llround(wout * gx.h * static_cast<double>(M));
        std::vector<cplx> acc(M, cplx(0.0));
        for (std::size_t j = 0; j < nw; ++j) {
            // need G at w-value wout - w_j  ->  row index m - j + (-w0/hw)
            const long long jg = static_cast<long long>(m) - static_cast<long long>(j) +
                                 std::llround(-gw.origin / gw.h);
            if (jg < 0 || jg >= static_cast<long long>(nw)) continue;
            const cplx* arow = Af.data() + j * M;
            const cplx* grow = Gf.data() + static_cast<std::size_t>(jg) * M;
            for (std::size_t b = 0; b < M; ++b) {
                // A-row modulated by e^{-2 pi i x' wout}: circular bin shift
                const std::size_t bs =
                    static_cast<std::size_t>(((static_cast<long long>(b) + shift) % static_cast<long long>(M) +
                                              static_cast<long long>(M)) % static_cast<long long>(M));
                acc[b] += arow[bs] * grow[b];
            }
        }
        fft(acc, +1);
        // the bin-shift trick works on indices; restore the origin phase
        const double ph0 = -2.0 * M_PI * gx.origin * wout;
        const cplx c0 = cplx(std::cos(ph0), std::sin(ph0)) * cell;
        for (std::size_t i = 0; i < nx; ++i)
            out.at(i, m) = acc[static_cast<std::size_t>(j0) + i] * c0;
    });
    return out;
}

SampledFunction2D twisted_conv_direct(const SampledFunction2D& F, const SampledFunction2D& G) {
    if (!(F.grid == G.grid)) throw std::invalid_argument("twisted_conv_direct: grid mismatch");
    const auto& gx = F.grid.x;
    const auto& gw = F.grid.w;
    const double cell = gx.h * gw.h;
    SampledFunction2D out(F.grid);
    for (std::size_t i = 0; i < gx.n; ++i) {
        for (std::size_t m = 0; m < gw.n; ++m) {
            cplx acc(0.0);
            for (std::size_t ip = 0; ip < gx.n; ++ip) {
                const long long dx = static_cast<long long>(i) - static_cast<long long>(ip) +
                                     std::llround(-gx.origin / gx.h);
                if (dx < 0 || dx >= static_cast<long long>(gx.n)) continue;
                const double xp = gx.point(ip);
                for (std::size_t jp = 0; jp < gw.n; ++jp) {
                    const long long dw = static_cast<long long>(m) - static_cast<long long>(jp) +
                                         std::llround(-gw.origin / gw.h);
                    if (dw < 0 || dw >= static_cast<long long>(gw.n)) continue;
                    const double ph = 2.0 * M_PI * xp * (gw.point(jp) - gw.point(m));
                    acc += F.at(ip, jp) * G.at(static_cast<std::size_t>(dx), static_cast<std::size_t>(dw)) *
                           cplx(std::cos(ph), std::sin(ph));
                }
            }
            out.at(i, m) = acc * cell;
        }
    }
    return out;
}

YoungReport weighted_young_check(const SampledFunction1D& H, const SampledFunction1D& F,
                                 double p, double q, double r, const WeightPair& pair) {
    if (std::abs(1.0 + 1.0 / r - 1.0 / p - 1.0 / q) > 1e-12)
        throw std::invalid_argument("weighted_young_check: need 1 + 1/r = 1/p + 1/q");
    const double nH = lp_norm(H, p, pair.m);
    const double nF = lp_norm(F, q, pair.w);
    if (nH == 0.0 || nF == 0.0)
        throw std::invalid_argument("weighted_young_check: zero denominator");
    const auto HF = conv1d(H, F);
    YoungReport rep;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.weights = pair.name;
    rep.moderateness_constant = pair.moderateness_constant;
    rep.ratio = lp_norm(HF, r, pair.m) / (nH * nF);
    rep.pass = rep.ratio <= pair.moderateness_constant * (1.0 + kYoungTolerance);
    return rep;
}

} // namespace coorbit
