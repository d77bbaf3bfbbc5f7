#pragma once

#include <cmath>

#include "qsf/errors.hpp"
#include "qsf/oscillator.hpp"
#include "qsf/qcore.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

enum class Branch { raising_dominant, lowering_dominant };

struct MatrixElementResult {
    Complex value{0.0, 0.0};
    Branch branch = Branch::lowering_dominant;
    Complex kernel_value{0.0, 0.0};
};

/// Kernel polynomial of the q-oscillator matrix elements:
///   Q^{(mu,nu)}_n(x; q^gamma | q) = sum_{k=0}^n
///     q^{k^2(mu+nu) + (2 nu gamma + n) k - k(k-1)/2}
///     (q^{-n};q)_k / ((q;q)_k (q^{gamma+1};q)_k) x^k.
/// gamma enters only through real powers of q, so non-integer labels are
/// accepted (they arise in the q-Laguerre connection).
inline Complex q_kernel_Q(int n, const Complex& x, double gamma, double mu, double nu,
                          double q) {
    if (n < 0) throw DomainError("q_kernel_Q: n must be >= 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_kernel_Q: need 0 < q < 1");
    const double qmn = std::pow(q, -static_cast<double>(n));
    Complex total{0.0, 0.0};
    Complex poch_top{1.0, 0.0};   // (q^{-n};q)_k
    Complex poch_q{1.0, 0.0};     // (q;q)_k
    Complex poch_g{1.0, 0.0};     // (q^{gamma+1};q)_k
    Complex xk{1.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            poch_top *= (1.0 - qmn * std::pow(q, k - 1));
            poch_q *= (1.0 - std::pow(q, k));
            const Complex g = 1.0 - std::pow(q, gamma + k);
            if (std::abs(g) <= 1e-15 * (1.0 + std::pow(q, gamma + k)))
                throw DomainError("q_kernel_Q: lower parameter pole");
            poch_g *= g;
            xk *= x;
        }
        const double expo = static_cast<double>(k) * k * (mu + nu) +
                            (2.0 * nu * gamma + n) * k -
                            0.5 * static_cast<double>(k) * (k - 1);
        total += std::pow(q, expo) * poch_top / (poch_q * poch_g) * xk;
    }
    return total;
}

/// Kernel polynomial of the (p,q)-oscillator matrix elements:
///   L^{(gamma;mu,nu)}_n(x; p,q) = sum_{k=0}^n
///     (q^mu/p^nu)^{2k(gamma+k)} ((pq)^{-n};pq)_k
///       / ((pq;pq)_k ((pq)^{gamma+1};pq)_k)
///     p^{k(k+1)/2} [x(1-pq) p^{gamma+n}]^k.
/// gamma is the ladder offset |m-n|, always a nonnegative integer here.
inline Complex pq_kernel_L(int n, const Complex& x, int gamma, double mu, double nu,
                           double p, double q) {
    if (n < 0) throw DomainError("pq_kernel_L: n must be >= 0");
    if (gamma < 0) throw DomainError("pq_kernel_L: gamma must be >= 0");
    const double pq = p * q;
    if (!(p > 0.0 && q > 0.0 && pq > 0.0 && pq < 1.0))
        throw DomainError("pq_kernel_L: need p, q > 0 and 0 < pq < 1");
    const double w = std::pow(q, mu) / std::pow(p, nu);
    const double pqmn = std::pow(pq, -static_cast<double>(n));
    const Complex zbase = x * (1.0 - pq) * std::pow(p, gamma + n);
    Complex total{0.0, 0.0};
    Complex poch_top{1.0, 0.0};  // ((pq)^{-n};pq)_k
    Complex poch_b{1.0, 0.0};    // (pq;pq)_k
    Complex poch_g{1.0, 0.0};    // ((pq)^{gamma+1};pq)_k
    Complex zk{1.0, 0.0};
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            poch_top *= (1.0 - pqmn * std::pow(pq, k - 1));
            poch_b *= (1.0 - std::pow(pq, k));
            const Complex g = 1.0 - std::pow(pq, gamma + k);
            if (std::abs(g) <= 1e-15 * (1.0 + std::pow(pq, gamma + k)))
                throw DomainError("pq_kernel_L: lower parameter pole");
            poch_g *= g;
            zk *= zbase;
        }
        const double expo = 2.0 * k * (gamma + static_cast<double>(k));
        total += std::pow(w, expo) * poch_top / (poch_b * poch_g) *
                 std::pow(p, 0.5 * k * (k + 1.0)) * zk;
    }
    return total;
}

namespace detail {

inline Complex u_q_lowering(int m, int n, const Complex& alpha, const Complex& beta,
                            double mu, double nu, double q, Complex* kernel) {
    // n >= m: beta^{n-m} [n over m]_q q^{nu(n-m)^2} Q^{(mu,nu)}_m(-alpha beta (1-q); q^{n-m}|q)
    const int g = n - m;
    const Complex kern = q_kernel_Q(m, -alpha * beta * (1.0 - q), g, mu, nu, q);
    if (kernel) *kernel = kern;
    return pow_int(beta, g) * qbinomial(n, m, Complex(q)) *
           std::pow(q, nu * static_cast<double>(g) * g) * kern;
}

inline Complex u_q_raising(int m, int n, const Complex& alpha, const Complex& beta,
                           double mu, double nu, double q, Complex* kernel) {
    // m >= n: ((1-q)alpha)^{m-n} q^{mu(m-n)^2} / (q;q)_{m-n}
    //         * Q^{(nu,mu)}_n(-alpha beta (1-q); q^{m-n}|q)   (mu and nu swapped)
    const int g = m - n;
    const Complex kern = q_kernel_Q(n, -alpha * beta * (1.0 - q), g, nu, mu, q);
    if (kernel) *kernel = kern;
    return pow_int((1.0 - q) * alpha, g) * std::pow(q, mu * static_cast<double>(g) * g) /
           qpochhammer(Complex(q), Complex(q), g) * kern;
}

inline Complex u_pq_lowering(int m, int n, const Complex& alpha, const Complex& beta,
                             double mu, double nu, double p, double q, Complex* kernel) {
    // m <= n
    const int g = n - m;
    const Complex kern = pq_kernel_L(m, -alpha * beta, g, mu, nu, p, q);
    if (kernel) *kernel = kern;
    const double pref_w = std::pow(std::pow(q, mu - 0.25) / std::pow(p, nu - 0.25),
                                   static_cast<double>(g) * g);
    const double pref_qp = std::pow(q / p, -static_cast<double>(g) * (1.0 + 2.0 * m) / 4.0);
    const double binom = pq_factorial_std(p, q, n) /
                         (pq_factorial_std(p, q, m) * pq_factorial_std(p, q, g));
    return pow_int(-beta, g) * binom * pref_w * pref_qp * kern;
}

inline Complex u_pq_raising(int m, int n, const Complex& alpha, const Complex& beta,
                            double mu, double nu, double p, double q, Complex* kernel) {
    // m >= n
    const int g = m - n;
    const Complex kern = pq_kernel_L(n, -alpha * beta, g, mu, nu, p, q);
    if (kernel) *kernel = kern;
    // prod_{l=1}^{g} (p^{-l} - q^l) coincides with [p,q;p,q]_g
    const double denom = pq_factorial_std(p, q, g);
    const double pref_w = std::pow(std::pow(q, mu - 0.25) / std::pow(p, nu - 0.25),
                                   static_cast<double>(g) * g);
    const double pref_qp = std::pow(q / p, -static_cast<double>(g) * (1.0 + 2.0 * n) / 4.0);
    return pow_int(-alpha * (1.0 / p - q), g) / denom * pref_w * pref_qp * kern;
}

}  // namespace detail

/// Closed-form q-oscillator matrix element. Branch selection: n > m uses
/// the lowering-dominant formula, m > n the raising-dominant one; at
/// m = n both agree and the lowering branch is returned by convention.
inline MatrixElementResult u_q(int m, int n, const Complex& alpha, const Complex& beta,
                               double mu, double nu, double q) {
    if (m < 0 || n < 0) throw DomainError("u_q: m, n must be >= 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("u_q: need 0 < q < 1");
    MatrixElementResult out;
    if (n >= m) {
        out.branch = Branch::lowering_dominant;
        out.value = detail::u_q_lowering(m, n, alpha, beta, mu, nu, q, &out.kernel_value);
    } else {
        out.branch = Branch::raising_dominant;
        out.value = detail::u_q_raising(m, n, alpha, beta, mu, nu, q, &out.kernel_value);
    }
    return out;
}

/// Evaluates one specific branch of u_q; only sensible where that branch
/// is defined (lowering for n >= m, raising for m >= n). Used to test
/// branch agreement on the diagonal.
inline Complex u_q_branch(Branch b, int m, int n, const Complex& alpha,
                          const Complex& beta, double mu, double nu, double q) {
    if (b == Branch::lowering_dominant)
        return detail::u_q_lowering(m, n, alpha, beta, mu, nu, q, nullptr);
    return detail::u_q_raising(m, n, alpha, beta, mu, nu, q, nullptr);
}

/// Closed-form (p,q)-oscillator matrix element; same branch convention
/// as u_q.
inline MatrixElementResult u_pq(int m, int n, const Complex& alpha, const Complex& beta,
                                double mu, double nu, double p, double q) {
    if (m < 0 || n < 0) throw DomainError("u_pq: m, n must be >= 0");
    if (!(p > 0.0 && q > 0.0 && p * q > 0.0 && p * q < 1.0))
        throw DomainError("u_pq: need p, q > 0 and 0 < pq < 1");
    MatrixElementResult out;
    if (n >= m) {
        out.branch = Branch::lowering_dominant;
        out.value = detail::u_pq_lowering(m, n, alpha, beta, mu, nu, p, q, &out.kernel_value);
    } else {
        out.branch = Branch::raising_dominant;
        out.value = detail::u_pq_raising(m, n, alpha, beta, mu, nu, p, q, &out.kernel_value);
    }
    return out;
}

inline Complex u_pq_branch(Branch b, int m, int n, const Complex& alpha,
                           const Complex& beta, double mu, double nu, double p, double q) {
    if (b == Branch::lowering_dominant)
        return detail::u_pq_lowering(m, n, alpha, beta, mu, nu, p, q, nullptr);
    return detail::u_pq_raising(m, n, alpha, beta, mu, nu, p, q, nullptr);
}

}  // namespace qsf
