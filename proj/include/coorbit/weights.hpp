#ifndef COORBIT_WEIGHTS_HPP
#define COORBIT_WEIGHTS_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coorbit {

// Real-valued weight on the group carrier.  The 1D form takes a point of R;
// for the R^2 carrier weights are applied to the Euclidean norm of (x, w),
// so a single radial profile serves both settings.
using Weight = std::function<double(double)>;

struct AxiomViolation : std::runtime_error {
    std::string axiom;
    double x, y;
    AxiomViolation(std::string ax, double x_, double y_)
        : std::runtime_error("weight axiom '" + ax + "' fails at (x,y)=(" +
                             std::to_string(x_) + "," + std::to_string(y_) + ")"),
          axiom(std::move(ax)), x(x_), y(y_) {}
};

// Control weight w (submultiplicative, symmetric, >= 1) together with a
// w-moderate weight m.  moderateness_constant is the empirical maximum of
// m(x+y) / (w(x) m(y)) and m(x+y) / (m(x) w(y)) over the validation set.
struct WeightPair {
    Weight w;
    Weight m;
    double moderateness_constant = 1.0;
    std::string name = "const";
};

// Checks the four axiom families on the Cartesian square of sample_points
// (validation is a falsifier on a finite set, not a proof):
//   w >= 1, w(-x) = w(x), w(x+y) <= w(x) w(y),
//   m(x+y) <= C w(x) m(y) and m(x+y) <= C m(x) w(y).
// Throws AxiomViolation naming the failing axiom and the witness pair.
WeightPair validate_weight_pair(Weight w, Weight m,
                                const std::vector<double>& sample_points,
                                double tol = 1e-9);

// Default validation set: 256 quasi-random points in [-64, 64] plus the
// half-integer lattice near the origin.
std::vector<double> default_weight_samples();

// Named presets for the CLI: "const", "poly:a" (w = (1+|x|)^a), "log"
// (w = 1 + log(1+|x|)).  All use m = w and are validated before return.
WeightPair weight_preset(const std::string& name);

} // namespace coorbit

#endif
