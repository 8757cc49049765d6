#include "coorbit/atoms.hpp"

#include <cmath>

#include "coorbit/convolve.hpp"
#include "coorbit/diagnostics.hpp"
#include "coorbit/fft.hpp"
#include "coorbit/sampling.hpp"

namespace coorbit {

double AtomFamily::mother_value(double x) const {
    double r = 0.0;
    if (x >= residual.grid.origin && x < residual.grid.end()) {
        const double t = (x - residual.grid.origin) / residual.grid.h;
        const auto i0 = static_cast<std::size_t>(t);
        const double fr = t - static_cast<double>(i0);
        const auto i1 = std::min(i0 + 1, residual.grid.n - 1);
        r = (1.0 - fr) * residual.values[i0].real() + fr * residual.values[i1].real();
    }
    return edge_coeff * shannon_kernel_value(setting, x) + r;
}

SampledFunction1D AtomFamily::atom(long long k) const {
    const double gk = pou.tau * static_cast<double>(k);
    SampledFunction1D out(window);
    const double base_f = (window.origin - gk - residual.grid.origin) / window.h;
    const auto base = std::llround(base_f);
    const bool aligned = std::abs(base_f - static_cast<double>(base)) < 1e-9 && base >= 0 &&
                         base + static_cast<long long>(window.n) <= static_cast<long long>(residual.grid.n);
    for (std::size_t i = 0; i < window.n; ++i) {
        const double x = window.point(i) - gk;
        double r = 0.0;
        if (aligned) {
            r = residual.values[static_cast<std::size_t>(base + static_cast<long long>(i))].real();
        } else if (x >= residual.grid.origin && x < residual.grid.end()) {
            r = mother_value(x) - edge_coeff * shannon_kernel_value(setting, x);
        }
        out.values[i] = edge_coeff * shannon_kernel_value(setting, x) + r;
    }
    return out;
}

AtomFamily build_atoms(const ShannonSetting& s, const PartitionOfUnity1D& pou,
                       const Grid1D& window) {
    if (std::abs(pou.tau - s.default_tau()) > 1e-12)
        throw std::invalid_argument("build_atoms: atoms need the dense lattice tau = 1/(2 omega)");
    AtomFamily fam;
    fam.setting = s;
    fam.pou = pou;
    fam.window = window;
    fam.edge_coeff = left_inverse_multiplier(s, s.omega);   // = pi^2/4

    // residual multiplier m(xi) - m(omega) on the band, sampled inverse
    // transform on the doubled window (the residual's 1/x^2 tail makes the
    // periodization negligible there)
    const std::size_t n2 = 2 * window.n;
    const Grid1D big(2.0 * window.origin, window.h, n2);
    std::vector<cplx> spec(n2, cplx(0.0));
    const auto xi = fft_freqs(n2, window.h);
    for (std::size_t b = 0; b < n2; ++b) {
        if (std::abs(xi[b]) <= s.omega)
            spec[b] = left_inverse_multiplier(s, xi[b]) - fam.edge_coeff;
    }
    fft(spec, +1);
    SampledFunction1D r(big);
    const double scale = 1.0 / window.h;    // ifft -> continuum inverse transform
    for (std::size_t i = 0; i < n2; ++i) {
        // ifft index order corresponds to positions 0, h, ...; unfold to the
        // centered window
        const auto src = (i + n2 / 2) % n2;
        r.values[i] = spec[src] * scale;
    }
    fam.residual = std::move(r);
    return fam;
}

CoefficientSequence analyze(const SampledFunction1D& F, const PartitionOfUnity1D& pou) {
    return coefficients(F, pou);
}

SampledFunction1D synthesize(const CoefficientSequence& c, const AtomFamily& atoms) {
    if (std::abs(c.tau - atoms.pou.tau) > 1e-12)
        throw std::invalid_argument("synthesize: coefficient lattice does not match the atoms");
    SampledFunction1D out(atoms.window);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        const long long k = c.k_min + static_cast<long long>(idx);
        const auto a = atoms.atom(k);
        const cplx ck = c.values[idx];
        for (std::size_t i = 0; i < out.size(); ++i) out.values[i] += ck * a.values[i];
    }
    return out;
}

std::vector<double> roundtrip_errors(const SampledFunction1D& F, const AtomFamily& atoms,
                                     const std::vector<double>& exponents) {
    const auto c = analyze(F, atoms.pou);
    const auto rec = synthesize(c, atoms);
    SampledFunction1D diff(F.grid);
    for (std::size_t i = 0; i < F.size(); ++i) diff.values[i] = rec.values[i] - F.values[i];
    const Weight one = [](double) { return 1.0; };
    std::vector<double> out;
    for (double p : exponents) {
        const double den = lp_norm(F, p, one);
        out.push_back(den > 0.0 ? lp_norm(diff, p, one) / den : 0.0);
    }
    return out;
}

SynthesisBoundReport synthesis_bound_check(const CoefficientSequence& c, const AtomFamily& atoms,
                                           double p, double q, const WeightPair& pair) {
    SynthesisBoundReport rep;
    rep.p = p;
    rep.q = q;
    // 1/p + 1 = 1/q + 1/q'
    const double iqp = 1.0 / p + 1.0 - 1.0 / q;
    if (iqp <= 0.0 || iqp > 1.0)
        throw std::invalid_argument("synthesis_bound_check: no admissible q'");
    rep.qprime = 1.0 / iqp;

    const auto direct = synthesize(c, atoms);
    rep.direct = lp_norm(direct, p, pair.m);

    // majorant: (sum_k |c_k| chi_{[g_k - tau, g_k + tau]}) * (osc_Q a0 + |a0|)
    const auto& win = atoms.window;
    SampledFunction1D csum(win);
    for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
        const double gk = c.center(idx);
        const double a = std::abs(c.values[idx]);
        for (std::size_t i = 0; i < win.n; ++i)
            if (std::abs(win.point(i) - gk) <= c.tau) csum.values[i] += a;
    }
    SampledFunction1D a0(atoms.residual.grid);
    for (std::size_t i = 0; i < a0.size(); ++i)
        a0.values[i] = atoms.mother_value(a0.grid.point(i));
    auto osc = osc_q(a0, c.tau);
    SampledFunction1D dom(a0.grid);
    for (std::size_t i = 0; i < a0.size(); ++i)
        dom.values[i] = osc.values[i].real() + std::abs(a0.values[i]);
    const auto maj = conv1d(csum, dom);
    rep.majorant = lp_norm(maj, p, pair.m);

    const double cq = c.lp_norm(q, pair.m);
    const double kq = lp_norm(dom, rep.qprime, pair.w);
    rep.bound = cq * kq;
    rep.pass = rep.direct <= rep.majorant * (1.0 + kYoungTolerance) &&
               rep.majorant <= pair.moderateness_constant * rep.bound * (1.0 + kYoungTolerance);
    return rep;
}

} // namespace coorbit
