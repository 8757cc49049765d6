#include "coorbit/weights.hpp"

#include <cmath>

namespace coorbit {

WeightPair validate_weight_pair(Weight w, Weight m,
                                const std::vector<double>& sample_points,
                                double tol) {
    for (double x : sample_points) {
        const double wx = w(x), mx = m(x);
        if (!(wx > 0.0) || !std::isfinite(wx) || !(mx > 0.0) || !std::isfinite(mx))
            throw std::invalid_argument("validate_weight_pair: weights must be positive and finite");
        if (wx < 1.0 - tol) throw AxiomViolation("bounded-below", x, x);
        if (std::abs(w(-x) - wx) > tol * (1.0 + wx)) throw AxiomViolation("symmetric", x, -x);
    }
    double cmax = 0.0;
    for (double x : sample_points) {
        for (double y : sample_points) {
            const double s = x + y;
            if (w(s) > w(x) * w(y) * (1.0 + tol)) throw AxiomViolation("submultiplicative", x, y);
            const double r1 = m(s) / (w(x) * m(y));
            const double r2 = m(s) / (m(x) * w(y));
            cmax = std::max(cmax, std::max(r1, r2));
        }
    }
    // ctrl with constant folded in: reject only when no reasonable constant
    // exists (a genuinely non-moderate weight grows without bound here).
    if (cmax > 1e6) {
        // locate a witness for the error message
        for (double x : sample_points)
            for (double y : sample_points)
                if (m(x + y) / (w(x) * m(y)) > 1e6) throw AxiomViolation("ctrl1", x, y);
        throw AxiomViolation("ctrl2", 0.0, 0.0);
    }
    WeightPair out;
    out.w = std::move(w);
    out.m = std::move(m);
    out.moderateness_constant = cmax;
    return out;
}

std::vector<double> default_weight_samples() {
    std::vector<double> pts;
    // additive lagged Weyl sequence: deterministic, fills [-64, 64]
    double u = 0.5;
    const double golden = 0.6180339887498949;
    for (int i = 0; i < 256; ++i) {
        u += golden;
        u -= std::floor(u);
        pts.push_back((2.0 * u - 1.0) * 64.0);
    }
    for (int k = -8; k <= 8; ++k) pts.push_back(0.5 * k);
    return pts;
}

WeightPair weight_preset(const std::string& name) {
    Weight w;
    std::string canonical = name;
    if (name == "const") {
        w = [](double) { return 1.0; };
    } else if (name == "log") {
        w = [](double x) { return 1.0 + std::log1p(std::abs(x)); };
    } else if (name.rfind("poly:", 0) == 0) {
        const double a = std::stod(name.substr(5));
        if (a < 0.0) throw std::invalid_argument("weight_preset: poly exponent must be >= 0");
        w = [a](double x) { return std::pow(1.0 + std::abs(x), a); };
    } else {
        throw std::invalid_argument("weight_preset: unknown preset '" + name + "'");
    }
    auto pair = validate_weight_pair(w, w, default_weight_samples());
    pair.name = canonical;
    return pair;
}

} // namespace coorbit
