#pragma once

#include <functional>
#include <vector>

#include "qsf/scalar.hpp"

namespace qsf {

/// Nodes and weights for int_{-inf}^{inf} f(x) e^{-x^2} dx ~ sum w_i f(x_i).
struct GaussHermiteTable {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached Gauss-Hermite rule of the given size (thread-safe).
const GaussHermiteTable& gauss_hermite(int n);

/// Composite trapezoid for complex integrands on [a, b]; the independent
/// cross-check discretization for the Gaussian integrals.
Complex trapezoid(const std::function<Complex(double)>& f, double a, double b,
                  int intervals, bool parallel = true);

}  // namespace qsf
