#include "coorbit/diagnostics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "coorbit/convolve.hpp"
#include "coorbit/fft.hpp"

namespace coorbit {

SampledFunction1D osc_q(const SampledFunction1D& F, double q_halfwidth) {
    const double r = q_halfwidth / F.grid.h;
    const auto qn = std::llround(r);
    if (std::abs(r - static_cast<double>(qn)) > 1e-9)
        throw std::invalid_argument("osc_q: Q edge not grid-aligned");
    SampledFunction1D out(F.grid);
    const auto n = static_cast<long long>(F.grid.n);
    for (long long i = 0; i < n; ++i) {
        const cplx fi = F.values[static_cast<std::size_t>(i)];
        double best = 0.0;
        for (long long s = -qn; s <= qn; ++s) {
            const long long j = i + s;
            const cplx fj = (j >= 0 && j < n) ? F.values[static_cast<std::size_t>(j)] : cplx(0.0);
            best = std::max(best, std::abs(fj - fi));
        }
        out.values[static_cast<std::size_t>(i)] = best;
    }
    return out;
}

SampledFunction2D osc_q(const SampledFunction2D& F, double q_half_x, double q_half_w) {
    const double rx = q_half_x / F.grid.x.h, rw = q_half_w / F.grid.w.h;
    const auto qx = std::llround(rx), qw = std::llround(rw);
    if (std::abs(rx - static_cast<double>(qx)) > 1e-9 ||
        std::abs(rw - static_cast<double>(qw)) > 1e-9)
        throw std::invalid_argument("osc_q: Q edge not grid-aligned");
    SampledFunction2D out(F.grid);
    const auto nx = static_cast<long long>(F.grid.x.n);
    const auto nw = static_cast<long long>(F.grid.w.n);
    for (long long i = 0; i < nx; ++i) {
        for (long long j = 0; j < nw; ++j) {
            const cplx f0 = F.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            double best = 0.0;
            for (long long a = -qx; a <= qx; ++a) {
                const long long ia = i + a;
                for (long long b = -qw; b <= qw; ++b) {
                    const long long jb = j + b;
                    const cplx f = (ia >= 0 && ia < nx && jb >= 0 && jb < nw)
                                       ? F.at(static_cast<std::size_t>(ia), static_cast<std::size_t>(jb))
                                       : cplx(0.0);
                    best = std::max(best, std::abs(f - f0));
                }
            }
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = best;
        }
    }
    return out;
}

bool increments_decay(const std::vector<double>& norms) {
    if (norms.size() < 3) throw std::invalid_argument("increments_decay: need >= 3 windows");
    // monotone by construction; judge the last two increments
    const std::size_t n = norms.size();
    const double i1 = norms[n - 2] - norms[n - 3];
    const double i2 = norms[n - 1] - norms[n - 2];
    if (i2 <= 0.0) return true;   // norm already saturated
    return i1 / i2 >= kIncrementDecay;
}

OscReport osc_norm_scan(const SampledFunction1D& F, double q_halfwidth,
                        const std::vector<double>& exponents, const Weight& weight,
                        const std::vector<double>& windows) {
    for (std::size_t i = 1; i < windows.size(); ++i)
        if (windows[i] <= windows[i - 1])
            throw std::invalid_argument("osc_norm_scan: windows must increase");
    const auto osc = osc_q(F, q_halfwidth);
    OscReport rep;
    rep.q_halfwidth = q_halfwidth;
    rep.exponents = exponents;
    rep.windows = windows;
    for (double p : exponents) {
        std::vector<double> ns;
        for (double L : windows) ns.push_back(lp_norm_window(osc, p, weight, L));
        rep.finite.push_back(increments_decay(ns));
        for (double v : ns) rep.norms.push_back(v);
    }
    return rep;
}

namespace {

SampledFunction1D spectral_derivative(const SampledFunction1D& F, int n) {
    auto spec = F.values;
    fft(spec, -1);
    const auto xi = fft_freqs(F.grid.n, F.grid.h);
    for (std::size_t b = 0; b < spec.size(); ++b) {
        cplx m(0.0, 2.0 * M_PI * xi[b]);
        cplx mn(1.0);
        for (int k = 0; k < n; ++k) mn *= m;
        spec[b] *= mn;
    }
    fft(spec, +1);
    return SampledFunction1D(F.grid, std::move(spec));
}

} // namespace

SobolevReport sobolev_domination_check(const SampledFunction1D& F, double q_halfwidth,
                                       double p, const Weight& weight) {
    SobolevReport rep;
    rep.p = p;
    // LHS: int (sup_{|u|<=q} |F(u+x)|)^p w(x)^p dx
    const double r = q_halfwidth / F.grid.h;
    const auto qn = std::llround(r);
    if (std::abs(r - static_cast<double>(qn)) > 1e-9)
        throw std::invalid_argument("sobolev_domination_check: Q not grid-aligned");
    const auto n = static_cast<long long>(F.grid.n);
    double lhs = 0.0;
    for (long long i = 0; i < n; ++i) {
        double sup = 0.0;
        for (long long s = -qn; s <= qn; ++s) {
            const long long j = i + s;
            if (j >= 0 && j < n) sup = std::max(sup, std::abs(F.values[static_cast<std::size_t>(j)]));
        }
        lhs += std::pow(sup * weight(F.grid.point(static_cast<std::size_t>(i))), p);
    }
    rep.lhs = lhs * F.grid.h;
    double rhs = 0.0;
    for (int d = 0; d <= 2; ++d) {
        const auto Fd = spectral_derivative(F, d);
        if (d > 0) Fd.check_finite("sobolev_domination_check");
        rhs += std::pow(lp_norm(Fd, p, weight), p);
    }
    rep.rhs = 2.0 * q_halfwidth * rhs;
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    return rep;
}

namespace {

double lp_norm_wwindow(const SampledFunction2D& F, double p, double w_halfwidth) {
    double acc = 0.0;
    for (std::size_t i = 0; i < F.grid.x.n; ++i)
        for (std::size_t j = 0; j < F.grid.w.n; ++j)
            if (std::abs(F.grid.w.point(j)) <= w_halfwidth)
                acc += std::pow(std::abs(F.at(i, j)), p);
    return std::pow(acc * F.grid.x.h * F.grid.w.h, 1.0 / p);
}

SampledFunction2D spectral_dx(const SampledFunction2D& F) {
    // 1D transforms along x for each w column
    const std::size_t nx = F.grid.x.n, nw = F.grid.w.n;
    SampledFunction2D out(F.grid);
    const auto xi = fft_freqs(nx, F.grid.x.h);
    std::vector<cplx> col(nx);
    for (std::size_t j = 0; j < nw; ++j) {
        for (std::size_t i = 0; i < nx; ++i) col[i] = F.at(i, j);
        fft(col, -1);
        for (std::size_t b = 0; b < nx; ++b) col[b] *= cplx(0.0, 2.0 * M_PI * xi[b]);
        fft(col, +1);
        for (std::size_t i = 0; i < nx; ++i) out.at(i, j) = col[i];
    }
    return out;
}

SampledFunction2D spectral_dw(const SampledFunction2D& F) {
    const std::size_t nx = F.grid.x.n, nw = F.grid.w.n;
    SampledFunction2D out(F.grid);
    const auto eta = fft_freqs(nw, F.grid.w.h);
    std::vector<cplx> row(nw);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < nw; ++j) row[j] = F.at(i, j);
        fft(row, -1);
        for (std::size_t b = 0; b < nw; ++b) row[b] *= cplx(0.0, 2.0 * M_PI * eta[b]);
        fft(row, +1);
        for (std::size_t j = 0; j < nw; ++j) out.at(i, j) = row[j];
    }
    return out;
}

} // namespace

MixedSmoothnessReport mixed_smoothness_check(const SampledFunction2D& F,
                                             const ModulationSetting& setting,
                                             const std::vector<double>& exponents) {
    (void)setting;
    MixedSmoothnessReport rep;
    const auto K = modulation_kernel(F.grid);
    const auto FK = twisted_conv(F, K);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        num += std::norm(FK.values[i] - F.values[i]);
        den += std::norm(F.values[i]);
    }
    if (den == 0.0) {
        rep.membership_residual = 0.0;
        return rep;
    }
    rep.membership_residual = std::sqrt(num / den);
    if (rep.membership_residual > kMembershipThreshold)
        throw std::invalid_argument("mixed_smoothness_check: input not twisted-reproducing");

    const auto Kx = modulation_kernel_x_derivative(F.grid);
    const auto route_conv = twisted_conv(F, Kx);
    const auto route_spec = spectral_dx(F);
    double gn = 0.0, gd = 0.0;
    for (std::size_t i = 0; i < F.grid.x.n; ++i) {
        const double x = F.grid.x.point(i);
        // kink lines of the box-window kernel
        const double dk = std::min({std::abs(x), std::abs(x - 1.0), std::abs(x + 1.0)});
        if (dk <= 0.125) continue;
        for (std::size_t j = 0; j < F.grid.w.n; ++j) {
            gn += std::norm(route_conv.at(i, j) - route_spec.at(i, j));
            gd += std::norm(route_conv.at(i, j));
        }
    }
    rep.dx_two_route_gap = gd > 0.0 ? std::sqrt(gn / gd) : 0.0;

    const auto Fdw = spectral_dw(F);
    const auto Fdxw = spectral_dw(route_spec);
    rep.exponents = exponents;
    const double wmax = std::min(std::abs(F.grid.w.origin), std::abs(F.grid.w.end()));
    std::vector<double> wins;
    for (double L = wmax; L >= 1.0; L /= 4.0) wins.insert(wins.begin(), L);
    if (wins.size() < 3) wins = {wmax / 4.0, wmax / 2.0, wmax};
    const SampledFunction2D* parts[4] = {&F, &route_spec, &Fdw, &Fdxw};
    for (double p : exponents) {
        std::array<double, 4> ns{};
        std::array<bool, 4> fin{};
        for (int c = 0; c < 4; ++c) {
            std::vector<double> vals;
            for (double L : wins) vals.push_back(lp_norm_wwindow(*parts[c], p, L));
            ns[static_cast<std::size_t>(c)] = vals.back();
            fin[static_cast<std::size_t>(c)] = increments_decay(vals);
        }
        rep.norms.push_back(ns);
        rep.finite.push_back(fin);
    }
    return rep;
}

} // namespace coorbit
