#ifndef COORBIT_EXPERIMENTS_HPP
#define COORBIT_EXPERIMENTS_HPP

#include <cstdint>
#include <vector>

#include "coorbit/atoms.hpp"
#include "coorbit/convolve.hpp"
#include "coorbit/diagnostics.hpp"
#include "coorbit/discretize.hpp"
#include "coorbit/reports.hpp"

namespace coorbit {

// Canonical batch runs shared by the command line tool and the acceptance
// suite.  Every run is deterministic given its parameters and seed.

struct RoundtripParams {
    double omega = 1.0;
    double tau = 0.5;
    double halfwidth = 64.0;
    double spacing = 1.0 / 64.0;
    std::vector<double> exponents{1.5, 2.0, 3.0, 4.0};
    std::size_t trials = 20;
    std::uint64_t seed = 7;
    double tolerance = 1e-2;
};

RoundtripReport run_roundtrip(const RoundtripParams& p);

// the ten canonical Young configurations (function pair, p, q, r, weights)
struct YoungBatteryEntry {
    std::string pair_name;
    YoungReport report;
};
std::vector<YoungBatteryEntry> young_battery();

// single Young check on a named preset function pair
YoungReport young_single(const std::string& pair_name, double p, double q, double r,
                         const std::string& weights);

OscReport osc_scan_shannon(const std::string& target, double q_halfwidth,
                           const std::vector<double>& exponents,
                           const std::vector<double>& windows);

// central finite-difference oracles, tuned steps per order (independent of
// the closed-form derivative path)
double fd_derivative(int n, double x, const ShannonSetting& s);

struct DerivativeCheck {
    int n = 0;
    double max_rel_error = 0.0;      // over the probe points
    std::vector<double> norm_per_p;  // L_p over the largest window
    bool increments_ok = true;       // window-increment decay per p
    bool pass = false;
};
std::vector<DerivativeCheck> derivative_check(int n_max, double fd_tolerance = 1e-6);

struct ModulationSuiteReport {
    double fft_match_max_err = 0.0;      // vs closed-form spectrum, off the band edge
    double ugg_rel_l2 = 0.0;             // windowed transform of the box vs kernel
    double kok_rel_l2 = 0.0;             // twisted idempotence residual
    double lem1_max_discrepancy = 0.0;   // spectral factorization mismatch
    double runtime_seconds = 0.0;
    bool pass = false;
    MixedSmoothnessReport mixed;         // informational
    double membership_residual_ugg = 0.0;
};

ModulationSuiteReport run_modulation_suite();

json to_json(const ModulationSuiteReport& r);
json to_json(const std::vector<DerivativeCheck>& checks);
json to_json(const std::vector<YoungBatteryEntry>& battery);

} // namespace coorbit

#endif
