#pragma once

#include <vector>

#include "qsf/errors.hpp"
#include "qsf/polynomial.hpp"
#include "qsf/qcore.hpp"
#include "qsf/qseries.hpp"

namespace qsf {

/// H_n(y|q) = sum_k [n over k]_q y^k, assembled from the defining sum.
template <class T>
QPolynomial<T> rs_direct(int n, const T& q) {
    if (n < 0) throw DomainError("rs_direct: n must be >= 0");
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = qbinomial<T>(n, k, q);
    return QPolynomial<T>{std::move(c)};
}

/// H_n(y|q) via the three-term recurrence
///   H_{n+1} = (1+y) H_n - y (1-q^n) H_{n-1},   H_0 = 1, H_1 = 1+y.
/// Kept independent of rs_direct so the two constructions cross-check.
template <class T>
QPolynomial<T> rs_recurrence(int n, const T& q) {
    if (n < 0) throw DomainError("rs_recurrence: n must be >= 0");
    QPolynomial<T> prev = QPolynomial<T>::one();        // H_0
    if (n == 0) return prev;
    QPolynomial<T> cur{std::vector<T>{T(1), T(1)}};     // H_1 = 1 + y
    T qn = q;                                           // q^m at step m
    for (int m = 1; m < n; ++m) {
        QPolynomial<T> next = cur + cur.shifted_up() - (T(1) - qn) * prev.shifted_up();
        prev = std::move(cur);
        cur = std::move(next);
        qn *= q;
    }
    return cur;
}

/// Horner evaluation of H_n(y|q).
inline Complex rs_eval(int n, const Complex& y, double q) {
    return rs_direct<double>(n, q).template evaluate<Complex>(y);
}

/// Raising operator S+ f = f + y q^N (T^{-1} f), where q^N acts with the
/// ladder label of f (its index in the H-basis), not the per-monomial
/// degree. n_hint supplies that label; by default it is deg f, which is
/// correct whenever f is (a multiple of) some H_n. On H_n this gives
/// H_{n+1}.
template <class T>
QPolynomial<T> rs_raise(const QPolynomial<T>& f, const T& q, int n_hint = -1) {
    if (f.is_zero()) return f;
    const int label = (n_hint >= 0) ? n_hint : f.degree();
    return f + pow_int(q, label) * q_dilation(f, q, Dilation::inverse).shifted_up();
}

/// Lowering operator S- = Jackson derivative; on H_n gives [n]_q H_{n-1}.
template <class T>
QPolynomial<T> rs_lower(const QPolynomial<T>& f, const T& q) {
    return jackson_derivative(f, q);
}

/// Number operator N_q = S+ S-; eigenrelation N_q H_n = [n]_q H_n.
/// The inner raising acts on S- f, whose ladder label is deg f - 1, which
/// is what the default hint of rs_raise produces.
template <class T>
QPolynomial<T> rs_number(const QPolynomial<T>& f, const T& q) {
    return rs_raise(rs_lower(f, q), q);
}

/// Closed form of the generating function sum_m alpha^m H_m(y|q)/(q;q)_m,
/// valid for |alpha| < 1 and |alpha y| < 1:
///   S_q(alpha; y) = 1 / ((alpha;q)_inf (alpha y;q)_inf).
inline Complex rs_generating_closed(const Complex& alpha, const Complex& y, double q,
                                    const SeriesPolicy& policy = {}) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("rs_generating_closed: need 0 < q < 1");
    if (!(std::abs(alpha) < 1.0) || !(std::abs(alpha * y) < 1.0))
        throw DomainError("rs_generating_closed: requires |alpha| < 1 and |alpha*y| < 1");
    const Complex qc{q, 0.0};
    return 1.0 / (qpochhammer_inf(alpha, qc, policy).value *
                  qpochhammer_inf(alpha * y, qc, policy).value);
}

/// Closed form of sum_m t^m q^{m(m-1)/2} H_m(y|q)/(q;q)_m:
///   (-t;q)_inf * 1φ1(0; -t; q, -t y).
inline Complex rs_generating2_closed(const Complex& t, const Complex& y, double q,
                                     const SeriesPolicy& policy = {}) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("rs_generating2_closed: need 0 < q < 1");
    PhiSpec spec;
    spec.upper_q = {Complex{0.0, 0.0}};
    spec.lower_q = {-t};
    spec.base_q = q;
    spec.argument = -t * y;
    const SeriesEval phi = phi_rs(spec, policy);
    return qpochhammer_inf(-t, Complex{q, 0.0}, policy).value * phi.value;
}

/// Left side of the q-difference equation satisfied by H_n, evaluated at y:
///   (qD + y q^n qD T^{-1} - [n]_q) H_n(y).
/// The q^n power follows from expanding N_q = S+ S- with the raising hint
/// n-1 and the commutation rule T^{-1} qD = q qD T^{-1}. Exactly zero in
/// exact arithmetic.
template <class T, class Y>
Y rs_qdifference_residual(int n, const Y& y, const T& q) {
    if (n < 0) throw DomainError("rs_qdifference_residual: n must be >= 0");
    if (q == T(1)) throw DomainError("rs_qdifference_residual: q = 1 excluded");
    const QPolynomial<T> h = rs_direct<T>(n, q);
    QPolynomial<T> lhs = jackson_derivative(h, q);
    lhs += pow_int(q, n) *
           jackson_derivative(q_dilation(h, q, Dilation::inverse), q).shifted_up();
    lhs -= qnumber_m<T>(n, q) * h;
    return lhs.template evaluate<Y>(y);
}

}  // namespace qsf
