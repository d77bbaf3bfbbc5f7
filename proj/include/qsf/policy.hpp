#pragma once

#include <cstdint>
#include <string>

#include "qsf/errors.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

/// Truncation contract for every infinite series / product evaluation.
struct SeriesPolicy {
    double rel_tol = 1e-14;
    int max_terms = 10000;
    /// Number of consecutive below-tolerance terms required before the
    /// tail is trusted: q-series terms can dip non-monotonically, so a
    /// single small term is not evidence of convergence.
    int consecutive_small = 3;

    void validate() const {
        if (!(rel_tol > 0)) throw DomainError("SeriesPolicy: rel_tol must be > 0");
        if (max_terms < 1) throw DomainError("SeriesPolicy: max_terms must be >= 1");
        if (consecutive_small < 1)
            throw DomainError("SeriesPolicy: consecutive_small must be >= 1");
    }
};

/// Result record of a truncated series evaluation.
struct SeriesEval {
    Complex value{0.0, 0.0};
    int terms_used = 0;
    bool converged = false;
    double est_error = 0.0;  // magnitude of the last included term
};

/// Sums sum_{k>=0} t_k where t_0 = first_term and t_{k+1} = t_k * ratio(k).
///
/// If terminate_at >= 0 the sum is known to be finite and is taken
/// exactly through index terminate_at (est_error 0, always converged).
/// Otherwise terms are added until `consecutive_small` successive terms
/// fall below rel_tol * |partial sum|; exceeding max_terms throws.
template <class RatioFn>
SeriesEval sum_ratio_series(const Complex& first_term, RatioFn&& ratio,
                            const SeriesPolicy& policy, long terminate_at = -1,
                            const char* label = "series") {
    policy.validate();
    SeriesEval out;
    Complex term = first_term;
    Complex partial{0.0, 0.0};
    int small_run = 0;
    for (long k = 0;; ++k) {
        partial += term;
        out.terms_used = static_cast<int>(k) + 1;
        out.est_error = abs_value(term);
        if (!is_finite(partial))
            throw NonConvergence(std::string(label) + ": non-finite partial sum at term " +
                                 std::to_string(k));
        if (terminate_at >= 0) {
            if (k == terminate_at) {
                out.converged = true;
                out.est_error = 0.0;
                break;
            }
        } else {
            if (abs_value(term) <= policy.rel_tol * abs_value(partial)) {
                if (++small_run >= policy.consecutive_small) {
                    out.converged = true;
                    break;
                }
            } else {
                small_run = 0;
            }
            if (k + 1 >= policy.max_terms)
                throw NonConvergence(std::string(label) + ": no convergence within " +
                                     std::to_string(policy.max_terms) + " terms");
        }
        term *= ratio(k);
    }
    out.value = partial;
    return out;
}

}  // namespace qsf
