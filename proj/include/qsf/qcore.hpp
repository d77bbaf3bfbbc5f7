#pragma once

#include <cmath>
#include <string>

#include "qsf/errors.hpp"
#include "qsf/policy.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

/// (a; q)_n = prod_{i=0}^{n-1} (1 - a q^i). Exact for exact backends.
template <class T>
T qpochhammer(const T& a, const T& q, int n) {
    if (n < 0) throw DomainError("qpochhammer: n must be >= 0");
    T acc(1);
    T aqi = a;
    for (int i = 0; i < n; ++i) {
        acc *= (T(1) - aqi);
        aqi *= q;
    }
    return acc;
}

/// (a; q)_infty for |q| < 1, truncated once the remaining factors are
/// within policy tolerance of 1 for `consecutive_small` factors in a row.
inline SeriesEval qpochhammer_inf(const Complex& a, const Complex& q,
                                  const SeriesPolicy& policy = {}) {
    policy.validate();
    if (!(std::abs(q) < 1.0))
        throw DomainError("qpochhammer_inf: requires |q| < 1");
    SeriesEval out;
    Complex acc{1.0, 0.0};
    Complex aqi = a;
    int small_run = 0;
    for (int i = 0;; ++i) {
        acc *= (Complex{1.0, 0.0} - aqi);
        out.terms_used = i + 1;
        out.est_error = std::abs(aqi);
        if (!is_finite(acc))
            throw NonConvergence("qpochhammer_inf: non-finite partial product");
        if (std::abs(aqi) <= policy.rel_tol) {
            if (++small_run >= policy.consecutive_small) {
                out.converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
        if (i + 1 >= policy.max_terms)
            throw NonConvergence("qpochhammer_inf: factor budget exhausted");
        aqi *= q;
    }
    out.value = acc;
    return out;
}

/// Gaussian binomial (q;q)_n / ((q;q)_k (q;q)_{n-k}), computed as the
/// telescoping product prod_{i=1}^{k} (1-q^{n-k+i})/(1-q^i) rather than a
/// ratio of three small Pochhammers, which cancels catastrophically for
/// q near 1. Exact for exact backends.
template <class T>
T qbinomial(int n, int k, const T& q) {
    if (n < 0 || k < 0) throw DomainError("qbinomial: indices must be >= 0");
    if (k > n) throw DomainError("qbinomial: k > n");
    if (k > n - k) k = n - k;
    T num(1), den(1);
    T qi = q;                          // q^i
    T qt = pow_int(q, n - k) * q;      // q^{n-k+i}
    for (int i = 1; i <= k; ++i) {
        num *= (T(1) - qt);
        den *= (T(1) - qi);
        qi *= q;
        qt *= q;
    }
    return num / den;
}

/// [n]_q = (1 - q^n) / (1 - q).
template <class T>
T qnumber_m(int n, const T& q) {
    if (n < 0) throw DomainError("qnumber_m: n must be >= 0");
    if (q == T(1)) throw DomainError("qnumber_m: q = 1 excluded; use the integer limit");
    return (T(1) - pow_int(q, n)) / (T(1) - q);
}

/// Symmetric q-number (q^n - q^{-n}) / (q - q^{-1}); defined for any
/// integer n and q outside {0, 1, -1}.
template <class T>
T qnumber_p(long long n, const T& q) {
    if (q == T(0) || q == T(1) || q == T(-1))
        throw DomainError("qnumber_p: q in {0, 1, -1} excluded");
    return (pow_int(q, n) - pow_int(q, -n)) / (q - T(1) / q);
}

template <class T>
T qfactorial_p(int n, const T& q) {
    if (n < 0) throw DomainError("qfactorial_p: n must be >= 0");
    T acc(1);
    for (int i = 1; i <= n; ++i) acc *= qnumber_p<T>(i, q);
    return acc;
}

/// Symmetric q-binomial [m over n] built from the symmetric factorials.
template <class T>
T qbinomial_p(int m, int n, const T& q) {
    if (n < 0 || m < 0) throw DomainError("qbinomial_p: indices must be >= 0");
    if (n > m) throw DomainError("qbinomial_p: n > m");
    return qfactorial_p<T>(m, q) / (qfactorial_p<T>(n, q) * qfactorial_p<T>(m - n, q));
}

/// Two-base factorial [p^rho, q^delta; p, q]_n =
/// prod_{i=0}^{n-1} (p^{-(rho+i)} - q^{delta+i}). Direct product; the
/// p-power/Pochhammer reduction is kept as an independent test, not as
/// the implementation.
inline double pq_factorial(double rho, double delta, double p, double q, int n) {
    if (n < 0) throw DomainError("pq_factorial: n must be >= 0");
    if (p == 0.0) throw DomainError("pq_factorial: p must be nonzero");
    double acc = 1.0;
    for (int i = 0; i < n; ++i)
        acc *= std::pow(p, -(rho + i)) - std::pow(q, delta + i);
    return acc;
}

/// [p,q;p,q]_n, the rho = delta = 1 case used by every (p,q)-series.
inline double pq_factorial_std(double p, double q, int n) {
    return pq_factorial(1.0, 1.0, p, q, n);
}

}  // namespace qsf
