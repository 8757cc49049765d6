#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "coorbit/fft.hpp"
#include "coorbit/kernels.hpp"
#include "coorbit/rng.hpp"
#include "coorbit/sampling.hpp"

using namespace coorbit;

namespace {
const Weight one = [](double) { return 1.0; };

SampledFunction1D box_fn(const Grid1D& g) {
    return SampledFunction1D::sample(g, [](double x) { return (x >= -0.5 && x < 0.5) ? 1.0 : 0.0; });
}
} // namespace

TEST_CASE("unit box has unit L2 norm up to quadrature") {
    const Grid1D g = Grid1D::centered(4.0, 1.0 / 128.0);
    const auto F = box_fn(g);
    CHECK(lp_norm(F, 2.0, one) == doctest::Approx(1.0).epsilon(2.0 / 128.0));
}

TEST_CASE("zero function has zero norm for every exponent") {
    const Grid1D g = Grid1D::centered(4.0, 1.0 / 64.0);
    const SampledFunction1D F(g);
    for (double p : {1.0, 1.5, 2.0, 4.0}) CHECK(lp_norm(F, p, one) == 0.0);
}

TEST_CASE("band kernel L2 norm against the spectral-side oracle") {
    // the band indicator has squared L2 norm 2, computed on the spectral
    // side; the sampled kernel must reproduce sqrt(2) within 0.01
    const Grid1D g = Grid1D::centered(64.0, 1.0 / 64.0);
    const auto K = shannon_kernel(ShannonSetting(1.0), g);
    CHECK(lp_norm(K, 2.0, one) == doctest::Approx(std::sqrt(2.0)).epsilon(0.01 / std::sqrt(2.0)));
    CHECK(std::abs(inner_product(K, K) - cplx(2.0)) < 0.02);
}

TEST_CASE("seminorm vector of an indicator is constant across exponents") {
    const Grid1D g = Grid1D::centered(4.0, 1.0 / 128.0);
    SeminormFamily fam;
    fam.exponents = {1.5, 2.0, 4.0};
    const auto v = seminorm_vector(box_fn(g), fam);
    for (double s : v) CHECK(s == doctest::Approx(1.0).epsilon(2.0 / 128.0));
}

TEST_CASE("seminorms of the band kernel are finite for every family exponent") {
    const Grid1D g = Grid1D::centered(64.0, 1.0 / 64.0);
    const auto K = shannon_kernel(ShannonSetting(1.0), g);
    SeminormFamily fam;   // default {1.5, 2, 3, 4}
    for (double s : seminorm_vector(K, fam)) {
        CHECK(std::isfinite(s));
        CHECK(s > 0.0);
    }
}

TEST_CASE("translate: identity, lattice shift, spectral shift") {
    const Grid1D g = Grid1D::centered(8.0, 1.0 / 64.0);
    const auto F = box_fn(g);
    const auto same = translate(F, 0.0);
    for (std::size_t i = 0; i < F.size(); ++i) CHECK(same.values[i] == F.values[i]);

    const auto sh = translate(F, 1.0);
    CHECK(sh.values[g.index_of(1.0)].real() == doctest::Approx(1.0));
    CHECK(sh.values[g.index_of(0.25)].real() == doctest::Approx(0.0));
    CHECK(sh.values[g.index_of(1.25)].real() == doctest::Approx(1.0));

    CHECK_THROWS(translate(F, 0.3 * g.h));

    // half-step spectral translate of the band kernel vanishes at 0
    const Grid1D gk = Grid1D::centered(64.0, 1.0 / 64.0);
    const auto K = shannon_kernel(ShannonSetting(1.0), gk);
    const auto Ks = translate(K, 0.5, true);
    CHECK(std::abs(Ks.values[gk.index_of(0.0)]) < 1e-6);
    CHECK(std::abs(Ks.values[gk.index_of(0.5)] - cplx(2.0)) < 1e-6);
}

TEST_CASE("norms are translation invariant for supported shifts") {
    const Grid1D g = Grid1D::centered(8.0, 1.0 / 64.0);
    const auto F = box_fn(g);
    for (double p : {1.5, 2.0, 4.0})
        CHECK(lp_norm(translate(F, 2.0), p, one) == doctest::Approx(lp_norm(F, p, one)));
}

TEST_CASE("weighted norms of translates obey the control-weight bound") {
    const auto pair = weight_preset("log");
    const Grid1D g = Grid1D::centered(16.0, 1.0 / 64.0);
    const auto F = box_fn(g);
    for (double s : {1.0, 3.0, 7.0}) {
        const double lhs = lp_norm(translate(F, s), 2.0, pair.m);
        const double rhs = pair.moderateness_constant * pair.w(s) * lp_norm(F, 2.0, pair.m);
        CHECK(lhs <= rhs * (1.0 + 1e-9));
    }
}

TEST_CASE("inner products: definition, disjoint supports") {
    const Grid1D g = Grid1D::centered(8.0, 1.0 / 64.0);
    const auto F = box_fn(g);
    CHECK(std::abs(inner_product(F, F).real() - lp_norm(F, 2.0, one) * lp_norm(F, 2.0, one)) < 1e-12);
    CHECK(std::abs(inner_product(F, translate(F, 2.0))) < 1e-15);
}

TEST_CASE("quadrature error of a smooth compactly supported function is O(h)") {
    auto tri = [](double x) { return std::max(0.0, 1.0 - std::abs(x)); };
    const double exact = std::sqrt(2.0 / 3.0);
    const auto e1 = std::abs(lp_norm(SampledFunction1D::sample(Grid1D::centered(4.0, 1.0 / 64), tri),
                                     2.0, one) - exact);
    const auto e2 = std::abs(lp_norm(SampledFunction1D::sample(Grid1D::centered(4.0, 1.0 / 128), tri),
                                     2.0, one) - exact);
    CHECK(e2 < e1);
    CHECK(e1 < 4.0 / 64.0);
}

TEST_CASE("band projection and out-of-band fraction") {
    const Grid1D g = Grid1D::centered(64.0, 1.0 / 64.0);
    GaussianSource gauss(3);
    const auto F = random_band_limited(ShannonSetting(1.0), g, gauss);
    // on the working window the envelope has died out at the boundary,
    // so spectral leakage is far below the 1e-6 inverse gate
    CHECK(out_of_band_fraction(F, 1.0) < 1e-10);
    const Grid1D gc = Grid1D::centered(16.0, 1.0 / 64.0);
    const auto chirp = SampledFunction1D::sample(
        gc, [](double x) { return std::exp(-x * x) * cplx(std::cos(16.0 * x), std::sin(16.0 * x)); });
    CHECK(out_of_band_fraction(chirp, 1.0) > 0.5);
    const auto proj = project_band(chirp, 1.0);
    CHECK(out_of_band_fraction(proj, 1.0) < 1e-20);
}

TEST_CASE("csv serialization writes the documented columns") {
    const Grid1D g = Grid1D::centered(1.0, 0.5);
    const auto F = SampledFunction1D::sample(g, [](double x) { return cplx(x, -x); });
    write_csv(F, "test_1d.csv");
    std::ifstream in("test_1d.csv");
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "x,re,im");
    CHECK(first == "-1,-1,1");
    std::remove("test_1d.csv");

    const Grid2D g2(Grid1D::centered(1.0, 1.0), Grid1D::centered(1.0, 1.0));
    const auto F2 = SampledFunction2D::sample(g2, [](double x, double w) { return cplx(x + w, 0.0); });
    write_csv(F2, "test_2d.csv");
    std::ifstream in2("test_2d.csv");
    std::getline(in2, header);
    CHECK(header == "x,w,re,im");
    std::remove("test_2d.csv");
}

TEST_CASE("binary serialization round trips exactly") {
    const Grid1D g = Grid1D::centered(2.0, 1.0 / 32.0);
    GaussianSource gauss(11);
    const auto F = random_band_limited(ShannonSetting(1.0), g, gauss);
    const std::string path = "test_roundtrip.crb";
    write_binary(F, path);
    const auto G = read_binary_1d(path);
    REQUIRE(G.grid == F.grid);
    for (std::size_t i = 0; i < F.size(); ++i) CHECK(G.values[i] == F.values[i]);
    std::remove(path.c_str());
}
