#include <doctest.h>

#include <cmath>
#include <random>

#include "coorbit/convolve.hpp"
#include "coorbit/discretize.hpp"
#include "coorbit/pou.hpp"
#include "coorbit/rng.hpp"

using namespace coorbit;

TEST_CASE("hat profile: peak, support endpoints, Fourier value at zero") {
    const Grid1D g = Grid1D::centered(8.0, 1.0 / 64.0);
    const auto pou = make_pou_1d(0.5, g);
    CHECK(pou.profile(0.0) == doctest::Approx(1.0));
    CHECK(pou.profile(0.5) == doctest::Approx(0.0));
    CHECK(pou.profile(-0.5) == doctest::Approx(0.0));
    CHECK(pou.profile(0.25) == doctest::Approx(0.5));
    CHECK(pou.profile_hat(0.0) == doctest::Approx(0.5));        // integral of the bump
    CHECK(pou.profile_hat(2.0) == doctest::Approx(0.0).epsilon(1e-12));  // zero at 1/tau
    for (double x : {-0.45, -0.1, 0.3})
        CHECK((pou.profile(x) >= 0.0 && pou.profile(x) <= 1.0));
}

TEST_CASE("partition sums to one on the window shrunk by tau, exactly") {
    const Grid1D g = Grid1D::centered(8.0, 1.0 / 64.0);
    const auto pou = make_pou_1d(0.5, g);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.point(i);
        if (x < g.origin + pou.tau || x > g.end() - pou.tau) continue;
        CHECK(std::abs(pou.partition_sum(x) - 1.0) < 1e-12);
    }
}

TEST_CASE("tau below the grid resolution is rejected") {
    const Grid1D g = Grid1D::centered(8.0, 1.0 / 8.0);
    CHECK_THROWS(make_pou_1d(0.1, g));
}

TEST_CASE("2D box partition: membership and exact unit sum at interior points") {
    const Grid2D g(Grid1D::centered(4.0, 1.0 / 16.0), Grid1D::centered(4.0, 1.0 / 16.0));
    const auto pou = make_pou_2d(g);
    CHECK(PartitionOfUnity2D::profile(0.0, 0.0) == 1.0);
    CHECK(PartitionOfUnity2D::profile(0.75, 0.0) == 0.0);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int t = 0; t < 100; ++t) {
        // snap to the grid so half-open box edges resolve unambiguously
        const double x = std::round(u(rng) * 16.0) / 16.0;
        const double w = std::round(u(rng) * 16.0) / 16.0;
        CHECK(pou.partition_sum(x, w) == doctest::Approx(1.0));
    }
}

TEST_CASE("2D partition needs spacings dividing one half") {
    CHECK_THROWS(make_pou_2d(Grid2D(Grid1D::centered(4.0, 0.3), Grid1D::centered(4.0, 0.25))));
}

TEST_CASE("density of lattices against a box") {
    const Grid1D win = Grid1D::centered(8.0, 1.0 / 32.0);
    CHECK(q_density_check(1.0, 1.0, win));          // integers with unit box
    CHECK_FALSE(q_density_check(2.0, 0.5, win));    // gaps at odd integers
    const Grid2D win2(Grid1D::centered(4.0, 1.0 / 16.0), Grid1D::centered(4.0, 1.0 / 16.0));
    CHECK(q_density_check(1.0, 1.0, 0.5, 0.5, win2));
}

TEST_CASE("hat coefficients agree with convolution against the even profile") {
    const Grid1D g = Grid1D::centered(16.0, 1.0 / 64.0);
    const auto pou = make_pou_1d(0.5, g);
    GaussianSource gauss(5);
    const auto F = random_band_limited(ShannonSetting(1.0), g, gauss);
    const auto c = coefficients(F, pou);
    // sample the bump on its support and convolve: values at lattice points
    // must reproduce the quadrature coefficients (the profile is even)
    const Grid1D hg(-0.5, g.h, 65);
    const auto hat = SampledFunction1D::sample(hg, [&](double x) { return pou.profile(x); });
    const auto conv = conv1d(F, hat);
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        const double gk = c.center(i);
        CHECK(std::abs(c.values[i] - conv.values[g.index_of(gk)]) < 1e-12);
    }
}
