#include "coorbit/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "coorbit/fft.hpp"

namespace coorbit {

namespace {

double finish_norm(double acc, double cell, double p, const char* who) {
    const double out = std::pow(acc * cell, 1.0 / p);
    if (!std::isfinite(out)) throw std::runtime_error(std::string(who) + ": overflow");
    return out;
}

} // namespace

double lp_norm(const SampledFunction1D& F, double p, const Weight& m) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i)
        acc += std::pow(std::abs(m(F.grid.point(i)) * F.values[i]), p);
    return finish_norm(acc, F.grid.h, p, "lp_norm");
}

double lp_norm(const SampledFunction2D& F, double p, const Weight& m) {
    if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < F.grid.x.n; ++i) {
        const double x = F.grid.x.point(i);
        for (std::size_t j = 0; j < F.grid.w.n; ++j) {
            const double w = F.grid.w.point(j);
            acc += std::pow(std::abs(m(std::hypot(x, w)) * F.at(i, j)), p);
        }
    }
    return finish_norm(acc, F.grid.x.h * F.grid.w.h, p, "lp_norm");
}

double l2_norm(const SampledFunction1D& F) {
    double acc = 0.0;
    for (const auto& v : F.values) acc += std::norm(v);
    return std::sqrt(acc * F.grid.h);
}

double l2_norm(const SampledFunction2D& F) {
    double acc = 0.0;
    for (const auto& v : F.values) acc += std::norm(v);
    return std::sqrt(acc * F.grid.x.h * F.grid.w.h);
}

double lp_norm_window(const SampledFunction1D& F, double p, const Weight& m,
                      double halfwidth) {
    if (p < 1.0) throw std::invalid_argument("lp_norm_window: p must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) {
        const double x = F.grid.point(i);
        if (std::abs(x) <= halfwidth) acc += std::pow(std::abs(m(x) * F.values[i]), p);
    }
    return finish_norm(acc, F.grid.h, p, "lp_norm_window");
}

std::vector<double> seminorm_vector(const SampledFunction1D& F, const SeminormFamily& fam) {
    if (fam.exponents.empty()) throw std::invalid_argument("seminorm_vector: empty family");
    std::vector<double> out;
    out.reserve(fam.exponents.size());
    for (double p : fam.exponents) out.push_back(lp_norm(F, p, fam.weight));
    return out;
}

SampledFunction1D translate(const SampledFunction1D& F, double shift, bool fourier_mode) {
    if (fourier_mode) {
        auto spec = F.values;
        fft(spec, -1);
        const auto xi = fft_freqs(F.grid.n, F.grid.h);
        for (std::size_t b = 0; b < spec.size(); ++b) {
            const double ph = -2.0 * M_PI * xi[b] * shift;
            spec[b] *= cplx(std::cos(ph), std::sin(ph));
        }
        fft(spec, +1);
        return SampledFunction1D(F.grid, std::move(spec));
    }
    const double r = shift / F.grid.h;
    const auto s = std::llround(r);
    if (std::abs(r - static_cast<double>(s)) > 1e-9)
        throw std::invalid_argument("translate: shift not lattice-aligned (use fourier_mode)");
    SampledFunction1D out(F.grid);
    const auto n = static_cast<long long>(F.grid.n);
    for (long long i = 0; i < n; ++i) {
        const long long j = i - s;
        out.values[static_cast<std::size_t>(i)] =
            (j >= 0 && j < n) ? F.values[static_cast<std::size_t>(j)] : cplx(0.0);
    }
    return out;
}

cplx inner_product(const SampledFunction1D& F, const SampledFunction1D& G) {
    if (!(F.grid == G.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    cplx acc(0.0);
    for (std::size_t i = 0; i < F.size(); ++i) acc += F.values[i] * std::conj(G.values[i]);
    return acc * F.grid.h;
}

cplx inner_product(const SampledFunction2D& F, const SampledFunction2D& G) {
    if (!(F.grid == G.grid)) throw std::invalid_argument("inner_product: grid mismatch");
    cplx acc(0.0);
    for (std::size_t i = 0; i < F.size(); ++i) acc += F.values[i] * std::conj(G.values[i]);
    return acc * F.grid.x.h * F.grid.w.h;
}

double out_of_band_fraction(const SampledFunction1D& F, double band) {
    auto spec = F.values;
    fft(spec, -1);
    const auto xi = fft_freqs(F.grid.n, F.grid.h);
    double inside = 0.0, total = 0.0;
    for (std::size_t b = 0; b < spec.size(); ++b) {
        const double e = std::norm(spec[b]);
        total += e;
        if (std::abs(xi[b]) <= band + 1e-12) inside += e;
    }
    return total > 0.0 ? (total - inside) / total : 0.0;
}

SampledFunction1D project_band(const SampledFunction1D& F, double band) {
    auto spec = F.values;
    fft(spec, -1);
    const auto xi = fft_freqs(F.grid.n, F.grid.h);
    for (std::size_t b = 0; b < spec.size(); ++b)
        if (std::abs(xi[b]) > band + 1e-12) spec[b] = cplx(0.0);
    fft(spec, +1);
    return SampledFunction1D(F.grid, std::move(spec));
}

} // namespace coorbit
