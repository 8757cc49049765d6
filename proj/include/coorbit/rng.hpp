#ifndef COORBIT_RNG_HPP
#define COORBIT_RNG_HPP

#include <cstdint>
#include <random>

#include "coorbit/grid.hpp"
#include "coorbit/kernels.hpp"

namespace coorbit {

// Deterministic Gaussian source: std::mt19937_64 with an explicit
// Box-Muller transform, so streams are identical across standard library
// implementations.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}
    double operator()();

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Seeded random element of the band-limited model space, normalized in L2.
// White complex noise is placed on the spectral bins |xi| <= 0.85*omega and
// the samples are then enveloped by sinc^4(0.0375*omega*x); the envelope
// widens the spectrum by a cubic B-spline of half-width 0.075*omega, so the
// result stays inside [-omega, omega] exactly while decaying like 1/x^4
// toward the window boundary (finite-window tails must die out for
// roundtrip comparisons to be meaningful).
SampledFunction1D random_band_limited(const ShannonSetting& s, const Grid1D& grid,
                                      GaussianSource& gauss);

} // namespace coorbit

#endif
