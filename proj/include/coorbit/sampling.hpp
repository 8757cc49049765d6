#ifndef COORBIT_SAMPLING_HPP
#define COORBIT_SAMPLING_HPP

#include <optional>
#include <vector>

#include "coorbit/grid.hpp"
#include "coorbit/weights.hpp"

namespace coorbit {

// Weighted L_p seminorm family representing the Frechet scale by a finite
// exponent list.  Every p must exceed 1 except where an operation
// explicitly admits p = 1 (norm computation itself allows p >= 1 so the
// L_1 divergence phenomena can be exhibited).
struct SeminormFamily {
    std::vector<double> exponents{1.5, 2.0, 3.0, 4.0};
    Weight weight = [](double) { return 1.0; };
};

// (sum_i |m(x_i) F(x_i)|^p * h)^{1/p}, rectangle rule.  Throws on overflow.
double lp_norm(const SampledFunction1D& F, double p, const Weight& m);
double lp_norm(const SampledFunction2D& F, double p, const Weight& m);

// unweighted shortcuts
double l2_norm(const SampledFunction1D& F);
double l2_norm(const SampledFunction2D& F);

// restriction of the norm to the centered sub-window |x| <= halfwidth
double lp_norm_window(const SampledFunction1D& F, double p, const Weight& m,
                      double halfwidth);

std::vector<double> seminorm_vector(const SampledFunction1D& F, const SeminormFamily& fam);

// translate by a lattice-aligned shift (zero fill), or exactly via the
// periodized band-limited interpolant when fourier_mode is set.
SampledFunction1D translate(const SampledFunction1D& F, double shift,
                            bool fourier_mode = false);

// sum_i F_i conj(G_i) * h; grids must agree.
cplx inner_product(const SampledFunction1D& F, const SampledFunction1D& G);
cplx inner_product(const SampledFunction2D& F, const SampledFunction2D& G);

// energy fraction of the spectrum outside [-band, band]
double out_of_band_fraction(const SampledFunction1D& F, double band);

// periodic-spectrum projection onto [-band, band]
SampledFunction1D project_band(const SampledFunction1D& F, double band);

} // namespace coorbit

#endif
