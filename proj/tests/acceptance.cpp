// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "coorbit/experiments.hpp"
#include "coorbit/fft.hpp"
#include "coorbit/rng.hpp"
#include "coorbit/sampling.hpp"
#include "coorbit/voice.hpp"

using namespace coorbit;

namespace {

int failures = 0;

void line(int id, bool pass, const std::string& what) {
    std::printf("C%02d %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

double rel_l2_window(const SampledFunction1D& a, const SampledFunction1D& b, double halfwidth) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.grid.point(i)) > halfwidth) continue;
        num += std::norm(a.values[i] - b.values[i]);
        den += std::norm(b.values[i]);
    }
    return std::sqrt(num / den);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// shared Shannon geometry: omega 1, window [-64, 64), h = 1/64, tau = 1/2
struct Shannon {
    ShannonSetting s{1.0};
    Grid1D grid = Grid1D::centered(64.0, 1.0 / 64.0);
    Grid1D big = Grid1D::centered(128.0, 1.0 / 64.0);
    PartitionOfUnity1D pou = make_pou_1d(0.5, grid);
    SampledFunction1D K = shannon_kernel(s, grid);
    SampledFunction1D Kbig = shannon_kernel(s, big);

    std::vector<SampledFunction1D> family(std::uint64_t seed, std::size_t trials) const {
        std::vector<SampledFunction1D> fam;
        fam.push_back(K);
        GaussianSource gauss(seed);
        for (std::size_t t = 0; t < trials; ++t) fam.push_back(random_band_limited(s, grid, gauss));
        return fam;
    }

    SampledFunction1D smoothed_closed_form(const SampledFunction1D& F) const {
        const Grid1D hg(-pou.tau, grid.h,
                        2 * static_cast<std::size_t>(std::llround(pou.tau / grid.h)) + 1);
        const auto hat = SampledFunction1D::sample(hg, [&](double x) { return pou.profile(x); });
        auto cf = conv1d(F, hat);
        for (auto& v : cf.values) v *= 2.0 * s.omega;
        return cf;
    }
};

void criterion_1(const Shannon& sh) {
    Timer tm;
    const auto KK = conv1d(sh.K, sh.K);
    // truncation of the slowly decaying kernel tails contaminates the outer
    // window; the identity is certified on the central quarter, matching
    // the region the convolution contract promises
    const double core = rel_l2_window(KK, sh.K, 16.0);
    const double full = rel_l2_window(KK, sh.K, 64.0);
    const double t = tm.seconds();
    const bool pass = core < 5e-3 && t < 1.0;
    line(1, pass,
         fmt("kernel idempotence: rel L2 %.3e on [-16,16] (tol 5e-3; full window %.3e), %.2fs",
             core, full, t));
}

void criterion_2(const Shannon& sh) {
    Timer tm;
    const auto fam = sh.family(7, 20);
    double worst = 0.0, worst4 = 0.0;
    for (const auto& F : fam) {
        const auto JF = j_phi_apply(F, sh.pou, sh.Kbig);
        const auto cf = sh.smoothed_closed_form(F);
        worst = std::max(worst, rel_l2_window(JF, cf, 64.0));
        // the doubled constant variant must be far off: it pins the factor
        auto cf2 = cf;
        for (auto& v : cf2.values) v *= 2.0;
        worst4 = std::max(worst4, rel_l2_window(JF, cf2, 64.0));
    }
    const double t = tm.seconds();
    const bool pass = worst < 1e-3 && worst4 > 0.4 && t < 5.0;
    line(2, pass,
         fmt("lattice sum equals 2w(F*phi): worst rel L2 %.3e over K+20 (tol 1e-3; doubled "
             "constant off by %.2f), %.2fs",
             worst, worst4, t));
}

void criterion_3(const Shannon& sh) {
    const auto fam = sh.family(7, 20);
    double worst = 0.0;
    for (const auto& F : fam) {
        const auto JF = j_phi_apply(F, sh.pou, sh.Kbig);
        // the truncated lattice sum of the heavy-tailed kernel leaks ~3e-5
        // of its energy past the band on this window; the gate sits above
        // that (the multiplier annihilates out-of-band content regardless)
        const auto rec = shannon_left_inverse(JF, sh.s, 1e-4);
        worst = std::max(worst, rel_l2_window(rec, F, 32.0));
    }
    line(3, worst < 1e-3,
         fmt("multiplier left inverse: worst rel L2 %.3e over K+20 on [-32,32] (tol 1e-3)", worst));
}

void criterion_4() {
    Timer tm;
    RoundtripParams p;   // omega 1, tau 1/2, L 64, h 1/64, p {1.5,2,3,4}, 20 trials, seed 7
    const auto rep = run_roundtrip(p);
    const double t = tm.seconds();
    double worst = 0.0;
    for (double e : rep.max_rel_error) worst = std::max(worst, e);
    const bool pass = rep.pass && t < 30.0;
    line(4, pass,
         fmt("atomic decomposition roundtrip: worst rel error %.3e over 20 trials, p in "
             "{1.5,2,3,4} (tol 1e-2), %.2fs",
             worst, t));
}

void criterion_5(const Shannon& sh) {
    // both sides assembled spectrally: left the bump-spectrum pairing,
    // right the multiplier image sampled on the lattice
    const auto fam = sh.family(7, 20);
    const auto xi = fft_freqs(sh.grid.n, sh.grid.h);
    const double dxi = 1.0 / (static_cast<double>(sh.grid.n) * sh.grid.h);
    double worst = 0.0;
    for (const auto& F : fam) {
        const auto Fh = spectrum(F);
        // right side: inverse transform of Fhat * sinc^2(xi/(2w)) at g_k
        auto spec = Fh;
        for (std::size_t b = 0; b < spec.size(); ++b) {
            const double sc = sinc(xi[b] / (2.0 * sh.s.omega));
            spec[b] *= (std::abs(xi[b]) <= sh.s.omega) ? sc * sc : 0.0;
        }
        const auto Ft = from_spectrum(sh.grid, std::move(spec));
        const double nf = l2_norm(F);
        for (long long k = sh.pou.k_min; k <= sh.pou.k_max; ++k) {
            const double gk = sh.pou.center(k);
            cplx lhs(0.0);
            for (std::size_t b = 0; b < Fh.size(); ++b) {
                if (std::abs(xi[b]) > sh.s.omega) continue;
                const double arg = 2.0 * M_PI * gk * xi[b];
                lhs += Fh[b] * sh.pou.profile_hat(xi[b]) * cplx(std::cos(arg), std::sin(arg));
            }
            lhs *= dxi * 2.0 * sh.s.omega;
            const cplx rhs = Ft.values[sh.grid.index_of(gk)];
            worst = std::max(worst, std::abs(lhs - rhs) / nf);
        }
    }
    line(5, worst < 1e-6,
         fmt("coefficient sampling identity: max |2w<F,phi_k> - Ft(g_k)| = %.3e * ||F|| (tol 1e-6)",
             worst));
}

void criterion_6() {
    const auto battery = young_battery();
    bool all = battery.size() == 10;
    double worst_margin = 0.0;
    for (const auto& e : battery) {
        all = all && e.report.pass;
        worst_margin = std::max(worst_margin,
                                e.report.ratio / (e.report.moderateness_constant * 1.05));
    }
    line(6, all,
         fmt("weighted convolution inequality: 10 configurations, worst ratio/gate %.3f",
             worst_margin));
}

void criterion_7() {
    const auto checks = derivative_check(3);
    bool all = true;
    double worst = 0.0;
    for (const auto& c : checks) {
        all = all && c.pass;
        worst = std::max(worst, c.max_rel_error);
    }
    line(7, all,
         fmt("kernel derivatives n<=3: closed form vs differences, worst rel %.3e (tol 1e-6), "
             "window increments decay",
             worst));
}

void criterion_8() {
    bool all = true;
    double worst = 0.0;
    for (double t : {1.5, 2.0, 3.0}) {
        const auto rep = multiplier_lt_bound(t, 0.1, ShannonSetting(1.0));
        all = all && rep.pass;
        worst = std::max(worst, rep.numeric / rep.analytic);
    }
    line(8, all,
         fmt("inverse-multiplier L_t bound: numeric <= analytic for t in {1.5,2,3}, worst ratio "
             "%.3e",
             worst));
}

void criterion_9() {
    const auto rep = osc_scan_shannon("K", 1.0, {1.0, 1.5, 2.0, 4.0}, {4.0, 16.0, 64.0});
    const bool pass = !rep.finite[0] && rep.finite[1] && rep.finite[2] && rep.finite[3];
    line(9, pass, "oscillation finiteness: verdict finite for p in {1.5,2,4}, not finite for p = 1");
}

void criterion_10() {
    const auto rep = run_modulation_suite();
    const bool pass = rep.pass && rep.runtime_seconds < 60.0;
    line(10, pass,
         fmt("box-window setting: spectrum match %.3e (<0.03), transform-vs-kernel %.3e (<2e-2), "
             "idempotence %.3e (<2e-2), factorization %.3e (<2e-2), %.1fs",
             rep.fft_match_max_err, rep.ugg_rel_l2, rep.kok_rel_l2, rep.lem1_max_discrepancy,
             rep.runtime_seconds));
}

void criterion_11() {
    const auto dense = injectivity_certificate_shannon(ShannonSetting(1.0), 0.5, 64);
    const auto coarse = injectivity_certificate_shannon(ShannonSetting(1.0), 1.0, 64);
    const auto mod = injectivity_certificate_modulation(ModulationSetting(4), 2);
    const bool pass = dense.sigma_min > 0.0 && coarse.sigma_min < dense.sigma_min &&
                      mod.sigma_min > 0.0 && mod.cols >= 25;
    line(11, pass,
         fmt("injectivity: sigma_min %.3f at tau=1/2 vs %.1e at tau=1 (folding); box setting "
             "sigma_min %.4f at R=4, dim %zu",
             dense.sigma_min, coarse.sigma_min, mod.sigma_min, mod.cols));
}

void criterion_12() {
    RoundtripParams p;
    const std::string a = serialize(to_json(run_roundtrip(p)));
    const std::string b = serialize(to_json(run_roundtrip(p)));
    const std::string c =
        serialize(to_json(injectivity_certificate_shannon(ShannonSetting(1.0), 0.5, 64)));
    const std::string d =
        serialize(to_json(injectivity_certificate_shannon(ShannonSetting(1.0), 0.5, 64)));
    const std::string e = serialize(to_json(young_battery()));
    const std::string f = serialize(to_json(young_battery()));
    const bool pass = a == b && c == d && e == f;
    line(12, pass, fmt("determinism: repeated runs are byte-identical (%zu/%zu/%zu report bytes)",
                       a.size(), c.size(), e.size()));
}

} // namespace

int main() {
    Timer total;
    Shannon sh;
    criterion_1(sh);
    criterion_2(sh);
    criterion_3(sh);
    criterion_4();
    criterion_5(sh);
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%s (%d/12 criteria, %.1fs)\n", failures == 0 ? "ALL PASS" : "FAILURES",
                12 - failures, total.seconds());
    return failures == 0 ? 0 : 1;
}
