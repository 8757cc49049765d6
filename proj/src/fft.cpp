#include "coorbit/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace coorbit {

namespace {

std::mutex plan_mutex;

fftw_plan get_plan_1d(std::size_t n, int sign) {
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> buf(n);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), p, p,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

fftw_plan get_plan_2d(std::size_t n0, std::size_t n1, int sign) {
    static std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(n0, n1, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<cplx> buf(n0 * n1);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), p, p,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

} // namespace

void fft(std::vector<cplx>& data, int sign) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    fftw_plan plan = get_plan_1d(data.size(), sign);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
    if (sign > 0) {
        const double s = 1.0 / static_cast<double>(data.size());
        for (auto& v : data) v *= s;
    }
}

void fft2(std::vector<cplx>& data, std::size_t n0, std::size_t n1, int sign) {
    if (data.size() != n0 * n1) throw std::invalid_argument("fft2: size mismatch");
    fftw_plan plan = get_plan_2d(n0, n1, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
    if (sign > 0) {
        const double s = 1.0 / static_cast<double>(data.size());
        for (auto& v : data) v *= s;
    }
}

std::vector<double> fft_freqs(std::size_t n, double h) {
    std::vector<double> xi(n);
    const double d = 1.0 / (static_cast<double>(n) * h);
    const auto half = (n + 1) / 2;
    for (std::size_t b = 0; b < half; ++b) xi[b] = static_cast<double>(b) * d;
    for (std::size_t b = half; b < n; ++b)
        xi[b] = (static_cast<double>(b) - static_cast<double>(n)) * d;
    return xi;
}

std::vector<cplx> spectrum(const SampledFunction1D& f) {
    std::vector<cplx> spec = f.values;
    fft(spec, -1);
    const auto xi = fft_freqs(f.grid.n, f.grid.h);
    const double two_pi = 2.0 * M_PI;
    for (std::size_t b = 0; b < spec.size(); ++b) {
        // h * DFT * e^{-2 pi i xi_b * origin}
        const double ph = -two_pi * xi[b] * f.grid.origin;
        spec[b] *= f.grid.h * cplx(std::cos(ph), std::sin(ph));
    }
    return spec;
}

SampledFunction1D from_spectrum(const Grid1D& grid, std::vector<cplx> spec) {
    if (spec.size() != grid.n) throw std::invalid_argument("from_spectrum: size mismatch");
    const auto xi = fft_freqs(grid.n, grid.h);
    const double two_pi = 2.0 * M_PI;
    for (std::size_t b = 0; b < spec.size(); ++b) {
        const double ph = two_pi * xi[b] * grid.origin;
        spec[b] *= cplx(std::cos(ph), std::sin(ph)) / grid.h;
    }
    fft(spec, +1);
    return SampledFunction1D(grid, std::move(spec));
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

} // namespace coorbit
