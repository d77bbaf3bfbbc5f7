#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "qsf/errors.hpp"

namespace qsf {

/// Validated deformation parameters: either q alone with 0 < q < 1, or a
/// (p, q) pair with p, q > 0 and 0 < pq < 1. Exponent labels (mu, nu)
/// may be attached for the deformed exponentials; they tighten the
/// domain via the growth factor q^{2mu} p^{1-2nu}.
struct DeformationParams {
    double q = 0.0;
    std::optional<double> p;
    std::optional<double> mu;
    std::optional<double> nu;

    static DeformationParams q_only(double q) {
        if (!(q > 0.0 && q < 1.0))
            throw DomainError("DeformationParams: q must satisfy 0 < q < 1, got q=" +
                              std::to_string(q));
        DeformationParams d;
        d.q = q;
        return d;
    }

    static DeformationParams pq(double p, double q) {
        if (!(p > 0.0) || !(q > 0.0))
            throw DomainError("DeformationParams: p and q must be positive");
        if (!(p * q > 0.0 && p * q < 1.0))
            throw DomainError("DeformationParams: need 0 < p*q < 1, got p*q=" +
                              std::to_string(p * q));
        DeformationParams d;
        d.q = q;
        d.p = p;
        return d;
    }

    bool is_pq() const { return p.has_value(); }

    /// Growth factor of the (mu, nu)-weighted terms. Strictly below one
    /// means the exponential series is entire; equal to one puts it on
    /// the e_q-like boundary where only |z| < radius converges.
    double growth_factor(double mu_, double nu_) const {
        const double pp = p.value_or(1.0);
        return std::pow(q, 2.0 * mu_) * std::pow(pp, 1.0 - 2.0 * nu_);
    }

    DeformationParams& with_exponents(double mu_, double nu_) {
        const double c = growth_factor(mu_, nu_);
        if (c > 1.0 + 1e-12)
            throw DomainError(
                "DeformationParams: q^{2mu} p^{1-2nu} = " + std::to_string(c) +
                " exceeds 1; the exponential series diverges for every z != 0");
        mu = mu_;
        nu = nu_;
        return *this;
    }
};

}  // namespace qsf
