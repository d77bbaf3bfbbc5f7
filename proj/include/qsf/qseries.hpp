#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qsf/errors.hpp"
#include "qsf/policy.hpp"
#include "qsf/qcore.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

/// Parameter block of a basic (q-only) or bibasic (q and p) hypergeometric
/// series: numerator/denominator lists per base, the bases, and the argument.
struct PhiSpec {
    std::vector<Complex> upper_q;  // a_i, attached to base_q
    std::vector<Complex> lower_q;  // b_j, attached to base_q
    std::vector<Complex> upper_p;  // c_i, attached to base_p (bibasic only)
    std::vector<Complex> lower_p;  // d_j, attached to base_p (bibasic only)
    Complex base_q{0.0, 0.0};
    std::optional<Complex> base_p;
    Complex argument{0.0, 0.0};
};

namespace detail {

/// Index N such that value ~= base^{-N} within 1e-12 relative, if any.
/// Such an upper parameter makes the series terminate at N.
inline std::optional<long> negative_power_index(const Complex& value, const Complex& base) {
    if (value == Complex{0.0, 0.0} || base == Complex{0.0, 0.0}) return std::nullopt;
    const double ab = std::abs(base);
    if (ab == 1.0) return std::nullopt;
    const double n_real = -std::log(std::abs(value)) / std::log(ab);
    const double n_round = std::round(n_real);
    if (n_round < 0.0 || n_round > 1e6) return std::nullopt;
    const long n = static_cast<long>(n_round);
    const Complex target = pow_int(base, -n);
    if (std::abs(value - target) <= 1e-12 * std::abs(target)) return n;
    return std::nullopt;
}

inline std::optional<long> termination_index(const PhiSpec& spec) {
    std::optional<long> best;
    auto consider = [&](const std::optional<long>& n) {
        if (n && (!best || *n < *best)) best = n;
    };
    for (const auto& a : spec.upper_q) consider(negative_power_index(a, spec.base_q));
    if (spec.base_p)
        for (const auto& c : spec.upper_p) consider(negative_power_index(c, *spec.base_p));
    return best;
}

inline void check_pole(const Complex& factor, const Complex& param, long k, const char* where) {
    if (std::abs(factor) <= 1e-15 * (1.0 + std::abs(param)))
        throw DomainError(std::string(where) + ": lower parameter pole at index " +
                          std::to_string(k));
}

}  // namespace detail

/// Basic hypergeometric series rφs: sum over k of
///   prod(a_i;q)_k / ((q;q)_k prod(b_j;q)_k) * [(-1)^k q^{k(k-1)/2}]^{1+s-r} x^k.
/// An upper parameter equal to q^{-N} (within 1e-12 relative) switches to
/// exact finite summation through k = N, so polynomial cases stay
/// polynomial regardless of the policy.
inline SeriesEval phi_rs(const PhiSpec& spec, const SeriesPolicy& policy = {}) {
    if (spec.base_p || !spec.upper_p.empty() || !spec.lower_p.empty())
        throw DomainError("phi_rs: p-parameters present; use phi_bibasic");
    const long r = static_cast<long>(spec.upper_q.size());
    const long s = static_cast<long>(spec.lower_q.size());
    const long sign_pow = 1 + s - r;
    const Complex q = spec.base_q;
    const auto term_cap = detail::termination_index(spec);
    if (!term_cap && !(std::abs(q) < 1.0))
        throw DomainError("phi_rs: non-terminating series requires |q| < 1");

    Complex qk{1.0, 0.0};  // q^k
    auto ratio = [&](long k) {
        Complex num{1.0, 0.0};
        for (const auto& a : spec.upper_q) num *= (Complex{1.0, 0.0} - a * qk);
        Complex den = Complex{1.0, 0.0} - q * qk;  // (q;q) factor 1-q^{k+1}
        detail::check_pole(den, q, k, "phi_rs");
        for (const auto& b : spec.lower_q) {
            const Complex f = Complex{1.0, 0.0} - b * qk;
            detail::check_pole(f, b, k, "phi_rs");
            den *= f;
        }
        Complex extra{1.0, 0.0};
        if (sign_pow != 0) extra = pow_int(-qk, sign_pow);
        qk *= q;
        return num / den * extra * spec.argument;
    };
    return sum_ratio_series(Complex{1.0, 0.0}, ratio, policy,
                            term_cap ? *term_cap : -1, "phi_rs");
}

/// Bibasic hypergeometric series: q-attached lists (a over b) and
/// p-attached lists (c over d), with the sign/power balancing factors
///   [(-1)^l q^{l(l-1)/2}]^{1+#b-#a} [(-1)^l p^{l(l-1)/2}]^{#d-#c}
/// and argument power z^l.
inline SeriesEval phi_bibasic(const PhiSpec& spec, const SeriesPolicy& policy = {}) {
    if (!spec.base_p) throw DomainError("phi_bibasic: base_p not set");
    const long na = static_cast<long>(spec.upper_q.size());
    const long mb = static_cast<long>(spec.lower_q.size());
    const long rc = static_cast<long>(spec.upper_p.size());
    const long sd = static_cast<long>(spec.lower_p.size());
    const long sign_pow_q = 1 + mb - na;
    const long sign_pow_p = sd - rc;
    const Complex q = spec.base_q;
    const Complex p = *spec.base_p;
    const auto term_cap = detail::termination_index(spec);
    if (!term_cap && !(std::abs(q) < 1.0))
        throw DomainError("phi_bibasic: non-terminating series requires |q| < 1");

    Complex qk{1.0, 0.0}, pk{1.0, 0.0};
    auto ratio = [&](long l) {
        Complex num{1.0, 0.0};
        for (const auto& a : spec.upper_q) num *= (Complex{1.0, 0.0} - a * qk);
        for (const auto& c : spec.upper_p) num *= (Complex{1.0, 0.0} - c * pk);
        Complex den = Complex{1.0, 0.0} - q * qk;
        detail::check_pole(den, q, l, "phi_bibasic");
        for (const auto& b : spec.lower_q) {
            const Complex f = Complex{1.0, 0.0} - b * qk;
            detail::check_pole(f, b, l, "phi_bibasic");
            den *= f;
        }
        for (const auto& d : spec.lower_p) {
            const Complex f = Complex{1.0, 0.0} - d * pk;
            detail::check_pole(f, d, l, "phi_bibasic");
            den *= f;
        }
        Complex extra{1.0, 0.0};
        if (sign_pow_q != 0) extra *= pow_int(-qk, sign_pow_q);
        if (sign_pow_p != 0) extra *= pow_int(-pk, sign_pow_p);
        qk *= q;
        pk *= p;
        return num / den * extra * spec.argument;
    };
    return sum_ratio_series(Complex{1.0, 0.0}, ratio, policy,
                            term_cap ? *term_cap : -1, "phi_bibasic");
}

/// Little q-Jacobi polynomial p_n(z; alpha, beta; q) as the terminating
/// 2φ1 with uppers q^{-n}, q^{n+1} alpha beta, lower alpha q, argument qz.
inline Complex little_q_jacobi(int n, const Complex& z, const Complex& alpha,
                               const Complex& beta, double q) {
    if (n < 0) throw DomainError("little_q_jacobi: n must be >= 0");
    PhiSpec spec;
    spec.upper_q = {pow_int(Complex(q), -n), pow_int(Complex(q), n + 1) * alpha * beta};
    spec.lower_q = {alpha * q};
    spec.base_q = q;
    spec.argument = q * z;
    return phi_rs(spec).value;
}

/// Big q-Jacobi polynomial P_n(z; alpha, beta; q) as the terminating
/// 3φ2 with uppers q^{-n}, q^{n+1} alpha beta, q alpha z, lowers q alpha
/// and 0, argument q.
inline Complex big_q_jacobi(int n, const Complex& z, const Complex& alpha,
                            const Complex& beta, double q) {
    if (n < 0) throw DomainError("big_q_jacobi: n must be >= 0");
    PhiSpec spec;
    spec.upper_q = {pow_int(Complex(q), -n), pow_int(Complex(q), n + 1) * alpha * beta,
                    Complex(q) * alpha * z};
    spec.lower_q = {Complex(q) * alpha, Complex{0.0, 0.0}};
    spec.base_q = q;
    spec.argument = q;
    return phi_rs(spec).value;
}

/// Hahn-Exton q-Bessel function
///   J_n(z; q) = z^n (q^{n+1};q)_inf / (q;q)_inf * 1φ1(0; q^{n+1}; q, q z^2).
/// Only n >= 0 is defined here.
inline SeriesEval hahn_exton_bessel(int n, const Complex& z, double q,
                                    const SeriesPolicy& policy = {}) {
    if (n < 0) throw DomainError("hahn_exton_bessel: n must be >= 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("hahn_exton_bessel: need 0 < q < 1");
    const Complex qn1 = pow_int(Complex(q), n + 1);
    const Complex pref_num = qpochhammer_inf(qn1, Complex(q), policy).value;
    const Complex pref_den = qpochhammer_inf(Complex(q), Complex(q), policy).value;
    PhiSpec spec;
    spec.upper_q = {Complex{0.0, 0.0}};
    spec.lower_q = {qn1};
    spec.base_q = q;
    spec.argument = q * z * z;
    SeriesEval phi = phi_rs(spec, policy);
    const Complex pref = pow_int(z, n) * pref_num / pref_den;
    phi.value *= pref;
    phi.est_error *= std::abs(pref);
    return phi;
}

/// q-Bessel function of the second kind,
///   J2_nu(x; q) = sum_n q^{n(n+nu)} (-1)^n / ((q;q)_n (q;q)_{n+nu}) (x/2)^{2n+nu}.
inline SeriesEval q_bessel_2(int nu, const Complex& x, double q,
                             const SeriesPolicy& policy = {}) {
    if (nu < 0) throw DomainError("q_bessel_2: nu must be >= 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_bessel_2: need 0 < q < 1");
    if (x == Complex{0.0, 0.0}) {
        SeriesEval out;
        out.value = (nu == 0) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        out.terms_used = 1;
        out.converged = true;
        return out;
    }
    const Complex half = x / 2.0;
    const Complex t0 =
        pow_int(half, nu) / qpochhammer(Complex(q), Complex(q), nu);
    const Complex h2 = half * half;
    auto ratio = [&, q](long n) {
        const double qn1 = std::pow(q, static_cast<double>(n) + 1.0);
        const double qn1nu = std::pow(q, static_cast<double>(n) + 1.0 + nu);
        return -std::pow(q, 2.0 * static_cast<double>(n) + 1.0 + nu) * h2 /
               ((1.0 - qn1) * (1.0 - qn1nu));
    };
    return sum_ratio_series(t0, ratio, policy, -1, "q_bessel_2");
}

/// q-Laguerre polynomial, defined through the terminating 1φ1:
///   L_n^{(gamma)}(x) = ((q^{gamma+1};q)_n / (q;q)_n)
///                      * 1φ1(q^{-n}; q^{gamma+1}; q, x q^{gamma+n+1}).
/// Note the argument carries +x here; the common reference convention
/// carries -x instead, so values differ from tables by x -> -x.
inline Complex q_laguerre(int n, double gamma, const Complex& x, double q) {
    if (n < 0) throw DomainError("q_laguerre: n must be >= 0");
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_laguerre: need 0 < q < 1");
    const Complex qg1{std::pow(q, gamma + 1.0), 0.0};
    PhiSpec spec;
    spec.upper_q = {pow_int(Complex(q), -n)};
    spec.lower_q = {qg1};
    spec.base_q = q;
    spec.argument = x * std::pow(q, gamma + n + 1.0);
    const Complex phi = phi_rs(spec).value;
    const Complex pref = qpochhammer(qg1, Complex(q), n) /
                         qpochhammer(Complex(q), Complex(q), n);
    return pref * phi;
}

}  // namespace qsf
