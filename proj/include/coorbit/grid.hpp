#ifndef COORBIT_GRID_HPP
#define COORBIT_GRID_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coorbit {

using cplx = std::complex<double>;

// Uniform grid x_i = origin + i*h, i = 0..n-1.  Windows are half-open:
// the covered interval is [origin, origin + n*h).
struct Grid1D {
    double origin = 0.0;
    double h = 1.0;
    std::size_t n = 2;

    Grid1D() = default;
    Grid1D(double origin_, double h_, std::size_t n_) : origin(origin_), h(h_), n(n_) {
        if (!(h > 0.0)) throw std::invalid_argument("Grid1D: spacing must be positive");
        if (n < 2) throw std::invalid_argument("Grid1D: need at least two samples");
    }

    // centered window [-halfwidth, halfwidth) with spacing h
    static Grid1D centered(double halfwidth, double h_) {
        auto n_ = static_cast<std::size_t>(std::llround(2.0 * halfwidth / h_));
        return Grid1D(-halfwidth, h_, n_);
    }

    double point(std::size_t i) const { return origin + static_cast<double>(i) * h; }
    double end() const { return origin + static_cast<double>(n) * h; }

    // index of a grid-aligned coordinate; throws if x is not on the grid
    std::size_t index_of(double x, double tol = 1e-9) const;
    bool aligned(double x, double tol = 1e-9) const;

    bool operator==(const Grid1D& o) const {
        return origin == o.origin && h == o.h && n == o.n;
    }
};

struct Grid2D {
    Grid1D x;      // first coordinate
    Grid1D w;      // second coordinate (frequency-type variable)

    Grid2D() = default;
    Grid2D(Grid1D x_, Grid1D w_) : x(x_), w(w_) {}
    std::size_t size() const { return x.n * w.n; }
    bool operator==(const Grid2D& o) const { return x == o.x && w == o.w; }
};

// Complex-valued function sampled on a uniform grid.  Immutable by
// convention: operations return new objects.
struct SampledFunction1D {
    Grid1D grid;
    std::vector<cplx> values;

    SampledFunction1D() = default;
    explicit SampledFunction1D(Grid1D g) : grid(g), values(g.n, cplx(0.0)) {}
    SampledFunction1D(Grid1D g, std::vector<cplx> v);

    std::size_t size() const { return values.size(); }
    void check_finite(const std::string& who) const;

    template <class F>
    static SampledFunction1D sample(Grid1D g, F&& f) {
        SampledFunction1D out(g);
        for (std::size_t i = 0; i < g.n; ++i) out.values[i] = f(g.point(i));
        return out;
    }
};

// Row-major layout: value(ix, iw) = values[ix * grid.w.n + iw].
struct SampledFunction2D {
    Grid2D grid;
    std::vector<cplx> values;

    SampledFunction2D() = default;
    explicit SampledFunction2D(Grid2D g) : grid(g), values(g.size(), cplx(0.0)) {}

    cplx& at(std::size_t ix, std::size_t iw) { return values[ix * grid.w.n + iw]; }
    const cplx& at(std::size_t ix, std::size_t iw) const { return values[ix * grid.w.n + iw]; }
    std::size_t size() const { return values.size(); }
    void check_finite(const std::string& who) const;

    template <class F>
    static SampledFunction2D sample(Grid2D g, F&& f) {
        SampledFunction2D out(g);
        for (std::size_t i = 0; i < g.x.n; ++i)
            for (std::size_t j = 0; j < g.w.n; ++j)
                out.at(i, j) = f(g.x.point(i), g.w.point(j));
        return out;
    }
};

// CSV: columns coordinate(s), re, im.  Binary: little-endian doubles with a
// small header carrying the grid parameters (see grid.cpp for the layout).
void write_csv(const SampledFunction1D& f, const std::string& path);
void write_csv(const SampledFunction2D& f, const std::string& path);
void write_binary(const SampledFunction1D& f, const std::string& path);
SampledFunction1D read_binary_1d(const std::string& path);

} // namespace coorbit

#endif
