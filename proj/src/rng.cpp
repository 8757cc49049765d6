#include "coorbit/rng.hpp"

#include <cmath>

#include "coorbit/fft.hpp"
#include "coorbit/sampling.hpp"

namespace coorbit {

double GaussianSource::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on uniforms drawn as 53-bit doubles
    double u1, u2;
    do {
        u1 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    spare_ = rad * std::sin(ang);
    have_spare_ = true;
    return rad * std::cos(ang);
}

SampledFunction1D random_band_limited(const ShannonSetting& s, const Grid1D& grid,
                                      GaussianSource& gauss) {
    const auto xi = fft_freqs(grid.n, grid.h);
    std::vector<cplx> spec(grid.n, cplx(0.0));
    for (std::size_t b = 0; b < grid.n; ++b)
        if (std::abs(xi[b]) <= 0.85 * s.omega) spec[b] = cplx(gauss(), gauss());
    fft(spec, +1);
    SampledFunction1D F(grid, std::move(spec));
    for (std::size_t i = 0; i < grid.n; ++i) {
        const double e = sinc(0.0375 * s.omega * grid.point(i));
        F.values[i] *= e * e * e * e;
    }
    const double n2 = l2_norm(F);
    if (n2 > 0.0)
        for (auto& v : F.values) v /= n2;
    return F;
}

} // namespace coorbit
