#include "coorbit/discretize.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>

#include "coorbit/fft.hpp"
#include "coorbit/parallel.hpp"
#include "coorbit/sampling.hpp"

namespace coorbit {

double CoefficientSequence::lp_norm(double p, const Weight& m) const {
    if (p < 1.0) throw std::invalid_argument("CoefficientSequence::lp_norm: p >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        acc += std::pow(std::abs(m(center(i)) * values[i]), p);
    return std::pow(acc, 1.0 / p);
}

CoefficientSequence coefficients(const SampledFunction1D& F, const PartitionOfUnity1D& pou) {
    if (!(F.grid == pou.window))
        throw std::invalid_argument("coefficients: function and partition on different grids");
    CoefficientSequence out;
    out.tau = pou.tau;
    out.k_min = pou.k_min;
    out.values.resize(pou.count());
    const auto& g = F.grid;
    for (long long k = pou.k_min; k <= pou.k_max; ++k) {
        const double gk = pou.center(k);
        const auto lo = static_cast<long long>(std::ceil((gk - pou.tau - g.origin) / g.h - 1e-9));
        const auto hi = static_cast<long long>(std::floor((gk + pou.tau - g.origin) / g.h + 1e-9));
        cplx acc(0.0);
        for (long long i = std::max(0LL, lo);
             i <= std::min(static_cast<long long>(g.n) - 1, hi); ++i) {
            const auto iu = static_cast<std::size_t>(i);
            acc += F.values[iu] * pou.profile(g.point(iu) - gk);
        }
        out.values[static_cast<std::size_t>(k - pou.k_min)] = acc * g.h;
    }
    return out;
}

Coefficients2D coefficients_2d(const SampledFunction2D& F, const PartitionOfUnity2D& pou) {
    if (!(F.grid == pou.window))
        throw std::invalid_argument("coefficients_2d: function and partition on different grids");
    Coefficients2D out;
    out.kx_min = pou.kx_min;
    out.kw_min = pou.kw_min;
    out.nx = static_cast<std::size_t>(pou.kx_max - pou.kx_min + 1);
    out.nw = static_cast<std::size_t>(pou.kw_max - pou.kw_min + 1);
    out.values.assign(out.nx * out.nw, cplx(0.0));
    const double cell = F.grid.x.h * F.grid.w.h;
    for (long long kx = pou.kx_min; kx <= pou.kx_max; ++kx) {
        for (long long kw = pou.kw_min; kw <= pou.kw_max; ++kw) {
            cplx acc(0.0);
            for (std::size_t i = 0; i < F.grid.x.n; ++i) {
                const double dx = F.grid.x.point(i) - static_cast<double>(kx);
                if (dx < -0.5 || dx >= 0.5) continue;
                for (std::size_t j = 0; j < F.grid.w.n; ++j) {
                    const double dw = F.grid.w.point(j) - static_cast<double>(kw);
                    if (dw < -0.5 || dw >= 0.5) continue;
                    acc += F.at(i, j);
                }
            }
            out.values[static_cast<std::size_t>(kx - pou.kx_min) * out.nw +
                       static_cast<std::size_t>(kw - pou.kw_min)] = acc * cell;
        }
    }
    return out;
}

SampledFunction1D lattice_sum(const CoefficientSequence& c, const SampledFunction1D& profile,
                              const Grid1D& out_grid) {
    if (std::abs(profile.grid.h - out_grid.h) > 1e-12 * out_grid.h)
        throw std::invalid_argument("lattice_sum: spacing mismatch");
    const double step = c.tau / out_grid.h;
    const auto m = std::llround(step);
    if (std::abs(step - static_cast<double>(m)) > 1e-9)
        throw std::invalid_argument("lattice_sum: lattice not grid-aligned");
    // profile index for (x_i - g_k): base + i - k*m
    const double base_f = (out_grid.origin - profile.grid.origin) / out_grid.h;
    const auto base = std::llround(base_f);
    if (std::abs(base_f - static_cast<double>(base)) > 1e-6)
        throw std::invalid_argument("lattice_sum: grids not mutually aligned");
    const auto pn = static_cast<long long>(profile.grid.n);
    {
        // every translate must be fully covered by the sampled profile
        const long long lo = base - c.k_max() * m;
        const long long hi = base + static_cast<long long>(out_grid.n) - 1 - c.k_min * m;
        if (lo < 0 || hi >= pn)
            throw std::invalid_argument("lattice_sum: profile grid does not contain the window");
    }
    SampledFunction1D out(out_grid);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        const cplx ck = c.values[idx];
        if (ck == cplx(0.0)) continue;
        const long long k = c.k_min + static_cast<long long>(idx);
        const long long off = base - k * m;
        for (std::size_t i = 0; i < out_grid.n; ++i)
            out.values[i] += ck * profile.values[static_cast<std::size_t>(off + static_cast<long long>(i))];
    }
    return out;
}

SampledFunction1D j_phi_apply(const SampledFunction1D& F, const PartitionOfUnity1D& pou,
                              const SampledFunction1D& kernel_samples) {
    const auto c = coefficients(F, pou);
    return lattice_sum(c, kernel_samples, F.grid);
}

double left_inverse_multiplier(const ShannonSetting& s, double xi) {
    if (std::abs(xi) > s.omega) return 0.0;
    const double tau = s.default_tau();
    const double sc = sinc(tau * xi);
    return 1.0 / (2.0 * s.omega * tau * sc * sc);
}

SampledFunction1D shannon_left_inverse(const SampledFunction1D& G, const ShannonSetting& s,
                                       double band_tol) {
    const double frac = out_of_band_fraction(G, s.omega);
    if (frac > band_tol) throw OutOfBandError(frac);
    // zero-pad to twice the window so the multiplier acts linearly
    const std::size_t n = G.grid.n;
    std::vector<cplx> buf(2 * n, cplx(0.0));
    std::copy(G.values.begin(), G.values.end(), buf.begin() + static_cast<long>(n / 2));
    fft(buf, -1);
    const auto xi = fft_freqs(2 * n, G.grid.h);
    for (std::size_t b = 0; b < buf.size(); ++b) buf[b] *= left_inverse_multiplier(s, xi[b]);
    fft(buf, +1);
    SampledFunction1D out(G.grid);
    std::copy(buf.begin() + static_cast<long>(n / 2), buf.begin() + static_cast<long>(n / 2 + n),
              out.values.begin());
    return out;
}

BoundReport multiplier_lt_bound(double t, double epsilon, const ShannonSetting& s) {
    if (!(t > 1.0)) throw std::invalid_argument("multiplier_lt_bound: t must exceed 1");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("multiplier_lt_bound: epsilon in (0,1)");
    BoundReport rep;
    rep.t = t;
    rep.epsilon = epsilon;
    const double w = s.omega;
    const double tau = s.default_tau();

    // C = sup over the band of |Re(phihat' conj(phihat))| / |phihat|^4 by
    // dense evaluation (phihat real here, so this is |phihat'| / phihat^3)
    const int nsamp = 20001;
    double C = 0.0;
    for (int i = 0; i < nsamp; ++i) {
        const double xi = -w + 2.0 * w * static_cast<double>(i) / (nsamp - 1);
        const double u = tau * xi;
        const double sc = sinc(u);
        // d/dxi [tau sinc^2(tau xi)]
        const double ds = (std::abs(u) < 1e-6)
                              ? -M_PI * M_PI * u / 3.0
                              : (std::cos(M_PI * u) * M_PI * u - std::sin(M_PI * u)) / (M_PI * u * u);
        const double ph = tau * sc * sc;
        const double dph = tau * 2.0 * sc * ds * tau;
        C = std::max(C, std::abs(dph * ph) / (ph * ph * ph * ph));
    }
    rep.C = C;

    // numeric side: wide-window FFT of the band-restricted |phihat|^{-2}
    const double hh = 1.0 / 128.0;
    const std::size_t N = std::size_t(1) << 20;   // window halfwidth 4096
    std::vector<cplx> buf(N, cplx(0.0));
    const auto xi = fft_freqs(N, hh);
    for (std::size_t b = 0; b < N; ++b) {
        if (std::abs(xi[b]) <= w) {
            const double sc = sinc(tau * xi[b]);
            const double ph = tau * sc * sc;
            buf[b] = 1.0 / (ph * ph);
        }
    }
    fft(buf, +1);
    // ifft carries 1/(N) ; continuum inverse transform needs * (N * dxi) = 1/hh
    double acc = 0.0;
    for (const auto& v : buf) acc += std::pow(std::abs(v) / hh, t);
    rep.numeric = acc * hh;

    const double j1 = 2.0 * epsilon * std::pow(w * w * w * M_PI * M_PI * M_PI * M_PI / 2.0, t);
    const double j23 = 2.0 * std::pow(w * w * M_PI * M_PI / 2.0 + 2.0 * w * C / M_PI, t) /
                       ((t - 1.0) * std::pow(epsilon, t - 1.0));
    rep.analytic = j1 + j23;
    rep.pass = rep.numeric <= rep.analytic;
    return rep;
}

InjectivityCertificate injectivity_certificate_shannon(const ShannonSetting& s, double tau,
                                                       std::size_t band_dim,
                                                       double lattice_halfwidth) {
    const double w = s.omega;
    const double dxi = 2.0 * w / static_cast<double>(band_dim);
    const auto kmax = static_cast<long long>(std::floor(lattice_halfwidth / tau));
    const auto rows = static_cast<std::size_t>(2 * kmax + 1);
    Eigen::MatrixXcd A(rows, band_dim);
    for (std::size_t j = 0; j < band_dim; ++j) {
        const double xij = -w + (static_cast<double>(j) + 0.5) * dxi;
        const double sc = sinc(tau * xij);
        const double ph = tau * sc * sc;
        for (long long k = -kmax; k <= kmax; ++k) {
            const double arg = 2.0 * M_PI * tau * static_cast<double>(k) * xij;
            A(static_cast<Eigen::Index>(k + kmax), static_cast<Eigen::Index>(j)) =
                std::sqrt(dxi) * ph * cplx(std::cos(arg), std::sin(arg));
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    InjectivityCertificate cert;
    cert.setting = "shannon";
    cert.tau = tau;
    cert.lattice_radius = static_cast<int>(kmax);
    cert.rows = rows;
    cert.cols = band_dim;
    cert.sigma_min = svd.singularValues().minCoeff();
    cert.sigma_max = svd.singularValues().maxCoeff();
    cert.window = lattice_halfwidth;
    cert.grid_h = dxi;
    return cert;
}

SampledFunction2D twisted_translate(const SampledFunction2D& F, double a, double b) {
    const auto& gx = F.grid.x;
    const auto& gw = F.grid.w;
    const auto sa = std::llround(a / gx.h);
    const auto sb = std::llround(b / gw.h);
    if (std::abs(a / gx.h - static_cast<double>(sa)) > 1e-9 ||
        std::abs(b / gw.h - static_cast<double>(sb)) > 1e-9)
        throw std::invalid_argument("twisted_translate: shift not lattice-aligned");
    SampledFunction2D out(F.grid);
    const cplx c0 = cplx(std::cos(M_PI * a * b), std::sin(M_PI * a * b));
    for (std::size_t i = 0; i < gx.n; ++i) {
        const long long ip = static_cast<long long>(i) - sa;
        if (ip < 0 || ip >= static_cast<long long>(gx.n)) continue;
        for (std::size_t j = 0; j < gw.n; ++j) {
            const long long jp = static_cast<long long>(j) - sb;
            if (jp < 0 || jp >= static_cast<long long>(gw.n)) continue;
            const double arg = -2.0 * M_PI * a * gw.point(j);
            out.at(i, j) = c0 * cplx(std::cos(arg), std::sin(arg)) *
                           F.at(static_cast<std::size_t>(ip), static_cast<std::size_t>(jp));
        }
    }
    return out;
}

InjectivityCertificate injectivity_certificate_modulation(const ModulationSetting& s,
                                                          int basis_radius, double grid_h,
                                                          double w_halfwidth) {
    // x-window holds both every translate's support [a-1, a+1] and every
    // coefficient box [k-1/2, k+1/2)
    const double xhw = std::max(static_cast<double>(basis_radius) + 1.0,
                                static_cast<double>(s.R) + 0.5);
    Grid2D grid(Grid1D::centered(xhw, grid_h), Grid1D::centered(w_halfwidth, grid_h));
    const auto K = modulation_kernel(grid);

    const int nb = 2 * basis_radius + 1;
    const std::size_t dim = static_cast<std::size_t>(nb) * static_cast<std::size_t>(nb);
    const std::size_t npts = K.size();
    const double cell = grid.x.h * grid.w.h;
    Eigen::MatrixXcd B(npts, dim);
    std::size_t col = 0;
    for (int a = -basis_radius; a <= basis_radius; ++a) {
        for (int b = -basis_radius; b <= basis_radius; ++b, ++col) {
            const auto T = twisted_translate(K, a, b);
            for (std::size_t i = 0; i < npts; ++i)
                B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) =
                    T.values[i] * std::sqrt(cell);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> bsvd(B, Eigen::ComputeThinU);
    const auto& sv = bsvd.singularValues();
    if (sv.minCoeff() <= 0.0 || sv.maxCoeff() / sv.minCoeff() > 1e8)
        throw std::runtime_error("injectivity_certificate_modulation: translate family rank-deficient");
    Eigen::MatrixXcd U = bsvd.matrixU();   // orthonormal basis of the span

    // coefficient boxes on the truncated unit lattice |k|,|l| <= R
    const auto nrows = static_cast<std::size_t>((2 * s.R + 1) * (2 * s.R + 1));
    Eigen::MatrixXcd M(nrows, dim);
    std::size_t row = 0;
    for (int kx = -s.R; kx <= s.R; ++kx) {
        for (int kw = -s.R; kw <= s.R; ++kw, ++row) {
            // <U_j, phi_kl> = sqrt(cell) * sum over the box of U_j
            Eigen::RowVectorXcd acc = Eigen::RowVectorXcd::Zero(static_cast<Eigen::Index>(dim));
            for (std::size_t i = 0; i < grid.x.n; ++i) {
                const double dx = grid.x.point(i) - static_cast<double>(kx);
                if (dx < -0.5 || dx >= 0.5) continue;
                for (std::size_t j = 0; j < grid.w.n; ++j) {
                    const double dw = grid.w.point(j) - static_cast<double>(kw);
                    if (dw < -0.5 || dw >= 0.5) continue;
                    acc += U.row(static_cast<Eigen::Index>(i * grid.w.n + j));
                }
            }
            M.row(static_cast<Eigen::Index>(row)) = acc * std::sqrt(cell);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> msvd(M);
    InjectivityCertificate cert;
    cert.setting = "modulation";
    cert.tau = 1.0;
    cert.lattice_radius = s.R;
    cert.rows = nrows;
    cert.cols = dim;
    cert.sigma_min = msvd.singularValues().minCoeff();
    cert.sigma_max = msvd.singularValues().maxCoeff();
    cert.grid_h = grid_h;
    cert.window = w_halfwidth;
    return cert;
}

} // namespace coorbit
