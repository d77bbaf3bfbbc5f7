#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "qsf/errors.hpp"
#include "qsf/params.hpp"
#include "qsf/policy.hpp"
#include "qsf/qcore.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

/// (q,mu)-exponential E_q^{(mu)}(z) = sum_n q^{mu n^2} z^n / (q;q)_n,
/// for mu >= 0 and 0 < q < 1. Entire in z for mu > 0; for mu = 0 this is
/// e_q(z) = 1/(z;q)_inf and needs |z| < 1.
inline SeriesEval eq_mu(const Complex& z, double q, double mu,
                        const SeriesPolicy& policy = {}) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("eq_mu: need 0 < q < 1");
    if (!(mu >= 0.0)) throw DomainError("eq_mu: need mu >= 0");
    if (mu == 0.0 && !(std::abs(z) < 1.0))
        throw DomainError("eq_mu: mu = 0 requires |z| < 1");
    auto ratio = [q, mu, z](long n) {
        return std::pow(q, mu * (2.0 * static_cast<double>(n) + 1.0)) * z /
               (1.0 - std::pow(q, static_cast<double>(n) + 1.0));
    };
    return sum_ratio_series(Complex{1.0, 0.0}, ratio, policy, -1, "eq_mu");
}

/// (p,q,mu,nu)-exponential
///   E^{mu,nu}_{p,q}(z) = sum_n (q^mu/p^nu)^{n^2} z^n / [p,q;p,q]_n.
/// The term-growth factor c = q^{2mu} p^{1-2nu} controls the domain:
/// c < 1 makes the series entire, c = 1 restricts to the e_q-like disk
/// |z| q^mu p^{1-nu} < 1, c > 1 diverges for every z != 0.
inline SeriesEval epq_munu(const Complex& z, double p, double q, double mu, double nu,
                           const SeriesPolicy& policy = {}) {
    auto params = DeformationParams::pq(p, q);
    const double c = params.growth_factor(mu, nu);
    if (c > 1.0 + 1e-12)
        throw DomainError("epq_munu: q^{2mu} p^{1-2nu} > 1; series diverges");
    if (std::abs(c - 1.0) <= 1e-12) {
        const double radius_factor = std::pow(q, mu) * std::pow(p, 1.0 - nu);
        if (!(std::abs(z) * radius_factor < 1.0))
            throw DomainError("epq_munu: boundary growth factor; |z| outside the "
                              "convergence disk");
    }
    const double w = std::pow(q, mu) / std::pow(p, nu);
    auto ratio = [w, p, q, z](long n) {
        const double nn = static_cast<double>(n);
        return std::pow(w, 2.0 * nn + 1.0) * std::pow(p, nn + 1.0) * z /
               (1.0 - std::pow(p * q, nn + 1.0));
    };
    return sum_ratio_series(Complex{1.0, 0.0}, ratio, policy, -1, "epq_munu");
}

/// (p,q)-exponential E_{p,q}(z) = sum_n (q/p)^{n(n-1)/2} z^n / [p,q;p,q]_n.
/// Summed by its own term recurrence so it can serve as an independent
/// side in identity checks against epq_munu.
inline SeriesEval epq_vinet(const Complex& z, double p, double q,
                            const SeriesPolicy& policy = {}) {
    DeformationParams::pq(p, q);
    if (q > 1.0 + 1e-12)
        throw DomainError("epq_vinet: q > 1; series diverges");
    if (std::abs(q - 1.0) <= 1e-12 && !(std::abs(z) * p < 1.0))
        throw DomainError("epq_vinet: boundary growth; |z| outside the convergence disk");
    auto ratio = [p, q, z](long n) {
        const double nn = static_cast<double>(n);
        return std::pow(q / p, nn) * std::pow(p, nn + 1.0) * z /
               (1.0 - std::pow(p * q, nn + 1.0));
    };
    return sum_ratio_series(Complex{1.0, 0.0}, ratio, policy, -1, "epq_vinet");
}

/// Named exponential families. EQ is the classical second q-exponential
/// E_q(z) = (-z;q)_inf = E^{(1/2)}(q^{-1/2} z); EpsPQ is the zeta = 1/2
/// member E^{(1/2)}_{p,q} = E^{1/4,1/4}_{p,q}.
enum class ExpName { eq, EQ, epq, EPQ, eps_pq };

inline SeriesEval named_exp(ExpName name, const Complex& z, const DeformationParams& d,
                            const SeriesPolicy& policy = {}) {
    switch (name) {
        case ExpName::eq:
            return eq_mu(z, d.q, 0.0, policy);
        case ExpName::EQ:
            return eq_mu(z / std::sqrt(d.q), d.q, 0.5, policy);
        case ExpName::epq:
            if (!d.p) throw DomainError("named_exp: e_pq requires p");
            return epq_munu(z, *d.p, d.q, 0.0, 0.0, policy);
        case ExpName::EPQ:
            if (!d.p) throw DomainError("named_exp: E_pq requires p");
            return epq_vinet(z, *d.p, d.q, policy);
        case ExpName::eps_pq:
            if (!d.p) throw DomainError("named_exp: eps_pq requires p");
            return epq_munu(z, *d.p, d.q, 0.25, 0.25, policy);
    }
    throw DomainError("named_exp: unknown name");
}

/// Deviations |E((p^{-1}-q) z) - exp(z)| along a ladder of (p, q) pairs
/// approaching (1, 1); pairs with p = 1 use the q-only family with the
/// (1-q) rescaling. The deviations should decrease monotonically along
/// any ladder that stays inside the valid domain.
inline std::vector<double> classical_limit_report(
    const Complex& z, double mu, double nu,
    std::span<const std::pair<double, double>> ladder,
    const SeriesPolicy& policy = {}) {
    std::vector<double> deviations;
    deviations.reserve(ladder.size());
    const Complex target = std::exp(z);
    for (const auto& [p, q] : ladder) {
        Complex val;
        if (p == 1.0) {
            val = eq_mu((1.0 - q) * z, q, mu, policy).value;
        } else {
            val = epq_munu((1.0 / p - q) * z, p, q, mu, nu, policy).value;
        }
        deviations.push_back(std::abs(val - target));
    }
    return deviations;
}

}  // namespace qsf
