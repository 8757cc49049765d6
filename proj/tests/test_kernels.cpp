#include <doctest.h>

#include <cmath>

#include "coorbit/fft.hpp"
#include "coorbit/kernels.hpp"
#include "coorbit/sampling.hpp"

using namespace coorbit;

TEST_CASE("band kernel: peak value and lattice zeros") {
    const ShannonSetting s(1.0);
    CHECK(shannon_kernel_value(s, 0.0) == doctest::Approx(2.0));
    for (int k = 1; k <= 8; ++k)
        CHECK(std::abs(shannon_kernel_value(s, 0.5 * k)) < 1e-14);
    const ShannonSetting s3(3.0);
    CHECK(shannon_kernel_value(s3, 0.0) == doctest::Approx(6.0));
    CHECK(std::abs(shannon_kernel_value(s3, 1.0 / 6.0)) < 1e-13);
}

TEST_CASE("sampled kernel spectrum is the band indicator") {
    const Grid1D g = Grid1D::centered(64.0, 1.0 / 64.0);
    const auto K = shannon_kernel(ShannonSetting(1.0), g);
    const auto spec = spectrum(K);
    const auto xi = fft_freqs(g.n, g.h);
    double worst = 0.0;
    for (std::size_t b = 0; b < spec.size(); ++b) {
        const double d = std::min(std::abs(xi[b] - 1.0), std::abs(xi[b] + 1.0));
        if (d < 0.25) continue;   // window-truncation ringing concentrates at the edges
        const double want = std::abs(xi[b]) < 1.0 ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(spec[b] - cplx(want)));
    }
    CHECK(worst < 0.02);
}

TEST_CASE("kernel is real and even") {
    const ShannonSetting s(1.0);
    for (double b : {0.1, 0.37, 1.2, 5.5})
        CHECK(shannon_kernel_value(s, b) == doctest::Approx(shannon_kernel_value(s, -b)));
}

TEST_CASE("unnormalized sinc derivatives: closed form vs known values") {
    CHECK(sinc_derivative_unnormalized(0, 1e-9) == doctest::Approx(1.0));
    CHECK(sinc_derivative_unnormalized(0, 0.5) == doctest::Approx(std::sin(0.5) / 0.5));
    // first derivative (x cos x - sin x)/x^2 evaluates to -1/pi at pi
    CHECK(sinc_derivative_unnormalized(1, M_PI) == doctest::Approx(-1.0 / M_PI).epsilon(1e-12));
    // second derivative against a central difference of the closed n=0 form
    const double h = 1e-4, x = 1.0;
    const double fd = (sinc_derivative_unnormalized(0, x + h) - 2 * sinc_derivative_unnormalized(0, x) +
                       sinc_derivative_unnormalized(0, x - h)) /
                      (h * h);
    CHECK(sinc_derivative_unnormalized(2, x) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("series branch joins the closed form smoothly at the switch radius") {
    for (int n = 0; n <= 4; ++n) {
        const double lo = sinc_derivative_unnormalized(n, 0.999e-3);
        const double hi = sinc_derivative_unnormalized(n, 1.001e-3);
        CHECK(std::abs(hi - lo) < 1e-6 * (1.0 + std::abs(hi)));
    }
}

TEST_CASE("box-window kernel: pointwise values") {
    CHECK(std::abs(modulation_kernel_value(0.0, 0.0) - cplx(1.0)) < 1e-15);
    CHECK(std::abs(modulation_kernel_value(0.0, 1.0)) < 1e-15);          // sinc(1) = 0
    CHECK(std::abs(modulation_kernel_value(0.0, 0.5) - cplx(sinc(0.5))) < 1e-15);
    for (double w : {-3.0, 0.0, 2.5}) {
        CHECK(modulation_kernel_value(1.2, w) == cplx(0.0));
        CHECK(modulation_kernel_value(-1.01, w) == cplx(0.0));
    }
    // triangular profile along w = 0
    CHECK(modulation_kernel_value(0.25, 0.0).real() == doctest::Approx(0.75));
}

TEST_CASE("box-window kernel satisfies the twisted conjugation symmetry") {
    // conj K(x,w) = e^{2 pi i x w} K(-x,-w): the group-inversion symmetry
    // carries the central phase in this reduced picture
    for (double x : {-0.7, -0.2, 0.3, 0.9}) {
        for (double w : {-2.3, -0.4, 1.1, 4.2}) {
            const cplx lhs = std::conj(modulation_kernel_value(x, w));
            const double ph = 2.0 * M_PI * x * w;
            const cplx rhs = cplx(std::cos(ph), std::sin(ph)) * modulation_kernel_value(-x, -w);
            CHECK(std::abs(lhs - rhs) < 1e-13);
        }
    }
}

TEST_CASE("closed-form spectrum values") {
    CHECK(std::abs(modulation_kernel_fourier(0.0, 0.0) - cplx(1.0)) < 1e-15);
    CHECK(modulation_kernel_fourier(0.3, 0.6) == cplx(0.0));
    CHECK(modulation_kernel_fourier(2.0, -0.8) == cplx(0.0));
    CHECK(std::abs(modulation_kernel_fourier(1.0, 0.25)) < 1e-15);   // sinc(1) = 0
}

TEST_CASE("x-derivative of the box-window kernel: finite-difference oracle away from kinks") {
    auto fd = [](double x, double w) {
        const double e = 1e-5;
        return (modulation_kernel_value(x + e, w) - modulation_kernel_value(x - e, w)) / (2 * e);
    };
    for (auto [x, w] : {std::pair{0.5, 1.3}, {0.25, -2.0}, {-0.6, 0.7}}) {
        const cplx a = modulation_kernel_x_derivative_value(x, w);
        CHECK(std::abs(a - fd(x, w)) < 1e-6 * std::max(1.0, std::abs(a)));
    }
    // the x-derivative has unit modulus on the open support strip
    for (auto [x, w] : {std::pair{0.5, 1.3}, {0.25, -2.0}, {-0.6, 0.7}, {0.9, 11.0}})
        CHECK(std::abs(modulation_kernel_x_derivative_value(x, w)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(modulation_kernel_x_derivative_value(1.5, 2.0) == cplx(0.0));
}

TEST_CASE("w-derivative of the box-window kernel: finite-difference oracle") {
    auto fd = [](double x, double w) {
        const double e = 1e-5;
        return (modulation_kernel_value(x, w + e) - modulation_kernel_value(x, w - e)) / (2 * e);
    };
    for (auto [x, w] : {std::pair{0.3, 0.7}, {-0.4, 2.2}, {0.0, 1.3}}) {
        const cplx a = modulation_kernel_w_derivative_value(x, w);
        CHECK(std::abs(a - fd(x, w)) < 1e-6 * std::max(1.0, std::abs(a)));
    }
    // along x = 0 the kernel is sinc(w), so the w-derivative matches it
    const double e = 1e-6, w0 = 1.3;
    const double dsinc = (sinc(w0 + e) - sinc(w0 - e)) / (2 * e);
    CHECK(std::abs(modulation_kernel_w_derivative_value(0.0, w0) - cplx(dsinc)) < 1e-4);
}

TEST_CASE("one-sided integrability evidence: L1 saturates only for p > 1") {
    const ShannonSetting s(1.0);
    const Weight one = [](double) { return 1.0; };
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        std::vector<double> norms;
        for (double L : {16.0, 32.0, 64.0}) {
            const auto K = shannon_kernel(s, Grid1D::centered(L, 1.0 / 64.0));
            norms.push_back(lp_norm(K, p, one));
        }
        const double i1 = norms[1] - norms[0], i2 = norms[2] - norms[1];
        if (p == 1.0)
            CHECK(i2 > 0.9 * i1);   // logarithmic growth: increments do not shrink
        else
            CHECK(i2 < i1);
    }
}
