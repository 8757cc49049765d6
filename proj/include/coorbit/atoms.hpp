#ifndef COORBIT_ATOMS_HPP
#define COORBIT_ATOMS_HPP

#include <vector>

#include "coorbit/discretize.hpp"
#include "coorbit/grid.hpp"
#include "coorbit/kernels.hpp"
#include "coorbit/pou.hpp"
#include "coorbit/weights.hpp"

namespace coorbit {

// Mother atom a0: the left inverse applied to the kernel, i.e. the inverse
// transform of (2 omega phihat(xi))^{-1} on the band.  Because the inverse
// is a Fourier multiplier it commutes with lattice translations, so every
// atom is a translate of a0 and one sampled copy serves the whole family.
//
// The multiplier jumps at the band edges, so a0 has a slowly decaying
// sin(2 pi omega x)/x tail; a plain periodic inverse FFT would fold that
// tail back into the window.  a0 is therefore split as
//   a0 = m(omega) * K + r,
// where m(omega) = pi^2/4 is the multiplier's edge value: the K part
// carries the whole 1/x tail in closed form, and r (multiplier vanishing
// at the edges) decays like 1/x^2 and is safely obtained by FFT.
struct AtomFamily {
    ShannonSetting setting{1.0};
    PartitionOfUnity1D pou;
    double edge_coeff = 0.0;          // multiplier value at the band edge
    SampledFunction1D residual;       // r sampled on the doubled window
    Grid1D window;

    // a0(x - g_k) on the output window, exact hat-lattice bookkeeping
    SampledFunction1D atom(long long k) const;
    double mother_value(double x) const;   // closed K part + interpolated r
};

AtomFamily build_atoms(const ShannonSetting& s, const PartitionOfUnity1D& pou,
                       const Grid1D& window);

// analysis map: the hat coefficients (the voice transform is the identity
// embedding in this setting)
CoefficientSequence analyze(const SampledFunction1D& F, const PartitionOfUnity1D& pou);

// synthesis: ordered sum over the lattice, deterministic regardless of
// thread count
SampledFunction1D synthesize(const CoefficientSequence& c, const AtomFamily& atoms);

struct RoundtripReport {
    double omega = 1.0, tau = 0.5, h = 0.0, halfwidth = 0.0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<double> exponents;
    std::vector<double> max_rel_error;   // per exponent, worst over trials
    bool pass = false;
    double tolerance = 0.0;
};

// S(A(F)) vs F in every seminorm of the family
std::vector<double> roundtrip_errors(const SampledFunction1D& F, const AtomFamily& atoms,
                                     const std::vector<double>& exponents);

struct SynthesisBoundReport {
    double p = 0, q = 0, qprime = 0;
    double direct = 0;      // || sum c_k a0(. - g_k) ||_{p,m}
    double majorant = 0;    // || (sum |c_k| chi_k) * (osc_Q a0 + |a0|) ||_{p,m}
    double bound = 0;       // ||c||_{q,m} ( ||osc_Q a0||_{q',w} + ||a0||_{q',w} )
    bool pass = false;
};

// checks direct <= majorant (pointwise domination integrated) and
// majorant <= moderateness * bound * (1 + tolerance); 1/p + 1 = 1/q + 1/q'
SynthesisBoundReport synthesis_bound_check(const CoefficientSequence& c, const AtomFamily& atoms,
                                           double p, double q, const WeightPair& pair);

} // namespace coorbit

#endif
