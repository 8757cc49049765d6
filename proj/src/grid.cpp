#include "coorbit/grid.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>

namespace coorbit {

std::size_t Grid1D::index_of(double x, double tol) const {
    const double r = (x - origin) / h;
    const auto i = std::llround(r);
    if (std::abs(r - static_cast<double>(i)) > tol || i < 0 ||
        i >= static_cast<long long>(n))
        throw std::invalid_argument("Grid1D: coordinate not on grid");
    return static_cast<std::size_t>(i);
}

bool Grid1D::aligned(double x, double tol) const {
    const double r = (x - origin) / h;
    return std::abs(r - std::round(r)) <= tol;
}

SampledFunction1D::SampledFunction1D(Grid1D g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
        throw std::invalid_argument("SampledFunction1D: value count != grid count");
}

void SampledFunction1D::check_finite(const std::string& who) const {
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error(who + ": non-finite sample");
}

void SampledFunction2D::check_finite(const std::string& who) const {
    for (const auto& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error(who + ": non-finite sample");
}

void write_csv(const SampledFunction1D& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "x,re,im\n";
    out.precision(17);
    for (std::size_t i = 0; i < f.size(); ++i)
        out << f.grid.point(i) << ',' << f.values[i].real() << ',' << f.values[i].imag() << '\n';
}

void write_csv(const SampledFunction2D& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << "x,w,re,im\n";
    out.precision(17);
    for (std::size_t i = 0; i < f.grid.x.n; ++i)
        for (std::size_t j = 0; j < f.grid.w.n; ++j)
            out << f.grid.x.point(i) << ',' << f.grid.w.point(j) << ','
                << f.at(i, j).real() << ',' << f.at(i, j).imag() << '\n';
}

// Binary layout: magic "CRB1", u64 n, f64 origin, f64 h, then n (re, im)
// pairs of f64, all little-endian.
void write_binary(const SampledFunction1D& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_binary: cannot open " + path);
    out.write("CRB1", 4);
    const std::uint64_t n = f.grid.n;
    out.write(reinterpret_cast<const char*>(&n), 8);
    out.write(reinterpret_cast<const char*>(&f.grid.origin), 8);
    out.write(reinterpret_cast<const char*>(&f.grid.h), 8);
    for (const auto& v : f.values) {
        const double re = v.real(), im = v.imag();
        out.write(reinterpret_cast<const char*>(&re), 8);
        out.write(reinterpret_cast<const char*>(&im), 8);
    }
}

SampledFunction1D read_binary_1d(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_binary_1d: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (std::string(magic, 4) != "CRB1") throw std::runtime_error("read_binary_1d: bad magic");
    std::uint64_t n = 0;
    double origin = 0.0, h = 0.0;
    in.read(reinterpret_cast<char*>(&n), 8);
    in.read(reinterpret_cast<char*>(&origin), 8);
    in.read(reinterpret_cast<char*>(&h), 8);
    Grid1D g(origin, h, n);
    std::vector<cplx> v(n);
    for (auto& z : v) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char*>(&re), 8);
        in.read(reinterpret_cast<char*>(&im), 8);
        z = cplx(re, im);
    }
    if (!in) throw std::runtime_error("read_binary_1d: truncated file");
    return SampledFunction1D(g, std::move(v));
}

} // namespace coorbit
