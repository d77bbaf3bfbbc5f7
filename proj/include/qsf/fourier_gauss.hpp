#pragma once

#include <string>

#include "qsf/params.hpp"
#include "qsf/policy.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

enum class FGDirection { forward, inverse, unified };

std::string to_string(FGDirection d);

/// One Gaussian-transform verification instance. The second base is
/// locked to the Gaussian coupling, q = p exp(-2 k^2); zeta labels the
/// exponential family under the integral and rho generalizes the
/// coupling strength (forward means rho = 1).
struct FGSpec {
    double p = 0.9;
    double k = 0.3;      // Gaussian coupling
    double zeta = 0.0;
    double rho = 1.0;
    Complex t{0.1, 0.0};
    double x = 0.0;
    int nodes = 128;     // Gauss-Hermite size

    double q() const;                       // p exp(-2k^2)
    double closed_zeta(FGDirection) const;  // label on the closed side
    /// Validates the induced parameters for the given direction; both the
    /// integrand family (zeta) and the shifted closed-side family must
    /// have term-growth factor below one. For the inverse direction this
    /// is exactly the condition that the Gaussian still dominates the
    /// growing integrand.
    void validate(FGDirection) const;
};

struct FGReport {
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    int nodes_used = 0;
    FGDirection direction = FGDirection::forward;
};

/// Non-integral side: the shifted-label exponential times exp(-x^2/2).
///   forward/unified: E^{(zeta + rho^2/2)}(t e^{-rho k x}) e^{-x^2/2}
///   inverse:         E^{(zeta - 1/2)}(t e^{i k x})        e^{-x^2/2}
Complex fg_closed_side(const FGSpec& spec, FGDirection dir,
                       const SeriesPolicy& policy = {});

/// Integral side (1/sqrt(2 pi)) int e^{ixy - y^2/2} E^{(zeta)}(t g(y)) dy,
/// with g(y) = e^{i rho k y} (forward/unified) or e^{k y} (inverse).
/// Gauss-Hermite is the primary rule; a trapezoid discretization on
/// [-12, 12] must agree within cross_tol or the evaluation fails.
Complex fg_quadrature_side(const FGSpec& spec, FGDirection dir,
                           const SeriesPolicy& policy = {}, double cross_tol = 1e-6,
                           bool parallel = true);

FGReport fg_verify(const FGSpec& spec, FGDirection dir, double tol,
                   const SeriesPolicy& policy = {}, bool parallel = true);

}  // namespace qsf
