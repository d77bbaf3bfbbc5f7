#pragma once

#include <cmath>
#include <map>
#include <string>

#include "qsf/errors.hpp"
#include "qsf/polynomial.hpp"
#include "qsf/qcore.hpp"
#include "qsf/report.hpp"
#include "qsf/rogers_szego.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

/// Finite linear combination of basis vectors, stored as index -> nonzero
/// coefficient. Immutable in spirit: operators return fresh expansions.
template <class T>
struct StateExpansion {
    std::map<int, T> entries;

    static StateExpansion basis(int n, T coeff = T(1)) {
        if (n < 0) throw DomainError("StateExpansion: negative basis index");
        StateExpansion s;
        s.add(n, std::move(coeff));
        return s;
    }

    void add(int idx, const T& coeff) {
        if (idx < 0) throw DomainError("StateExpansion: negative basis index");
        if (coeff == T(0)) return;
        auto [it, inserted] = entries.emplace(idx, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == T(0)) entries.erase(it);
        }
    }

    T coeff(int idx) const {
        auto it = entries.find(idx);
        return it == entries.end() ? T(0) : it->second;
    }

    bool empty() const { return entries.empty(); }

    StateExpansion& operator-=(const StateExpansion& o) {
        for (const auto& [idx, c] : o.entries) add(idx, -c);
        return *this;
    }
    StateExpansion& operator*=(const T& s) {
        if (s == T(0)) { entries.clear(); return *this; }
        for (auto& [idx, c] : entries) c *= s;
        return *this;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& [idx, c] : entries) m = std::max(m, abs_value_of(c));
        return m;
    }

private:
    static double abs_value_of(const T& v) {
        if constexpr (is_exact_backend_v<T>)
            return v == T(0) ? 0.0 : 1.0;  // exact mode only asks "zero or not"
        else
            return abs_value(v);
    }
};

enum class Ladder { plus, minus, number };

/// Single-parameter oscillator: A+ e_n = e_{n+1}, A- e_n = [n]_q e_{n-1},
/// N e_n = n e_n. Works over exact backends.
template <class T>
struct QOscillator {
    T q;
    explicit QOscillator(T q_) : q(std::move(q_)) {
        if (q == T(0) || q == T(1)) throw DomainError("QOscillator: q in {0,1} excluded");
    }
};

/// Two-parameter oscillator acting on the monomial basis e_n = z^n:
///   A+ e_n = -(q/p)^{-(n+1)/2} e_{n+1}
///   A- e_n = (q/p)^{1+n/2} (p^n - q^{-n})/(p^{-1} - q) e_{n-1}
///   N  e_n = n e_n.
/// The half-integer powers make this a floating-point-only realization.
struct PQOscillator {
    double p, q;
    PQOscillator(double p_, double q_) : p(p_), q(q_) {
        if (!(p > 0.0 && q > 0.0 && p * q > 0.0 && p * q < 1.0))
            throw DomainError("PQOscillator: need p, q > 0 and 0 < pq < 1");
    }
};

template <class T>
StateExpansion<T> osc_apply(const QOscillator<T>& osc, Ladder gen,
                            const StateExpansion<T>& s) {
    StateExpansion<T> out;
    for (const auto& [n, c] : s.entries) {
        switch (gen) {
            case Ladder::plus: out.add(n + 1, c); break;
            case Ladder::minus:
                if (n > 0) out.add(n - 1, c * qnumber_m<T>(n, osc.q));
                break;
            case Ladder::number: out.add(n, c * T(n)); break;
        }
    }
    return out;
}

inline StateExpansion<Complex> osc_apply(const PQOscillator& osc, Ladder gen,
                                         const StateExpansion<Complex>& s) {
    const double p = osc.p, q = osc.q;
    StateExpansion<Complex> out;
    for (const auto& [n, c] : s.entries) {
        switch (gen) {
            case Ladder::plus:
                out.add(n + 1, c * (-std::pow(q / p, -(n + 1) / 2.0)));
                break;
            case Ladder::minus:
                if (n > 0) {
                    const double amp = std::pow(q / p, 1.0 + n / 2.0) *
                                       (std::pow(p, n) - std::pow(q, -n)) /
                                       (1.0 / p - q);
                    out.add(n - 1, c * amp);
                }
                break;
            case Ladder::number:
                out.add(n, c * static_cast<double>(n));
                break;
        }
    }
    return out;
}

/// Scales basis index n by base^n (the abstract q^N / p^N operator).
template <class T, class B>
StateExpansion<T> number_power(const StateExpansion<T>& s, const B& base) {
    StateExpansion<T> out;
    for (const auto& [n, c] : s.entries) out.add(n, c * T(pow_int(base, n)));
    return out;
}

namespace detail {

/// Residual of one relation, measured relative to the magnitude of its
/// operands (the q^{-N} side grows like q^{-n}, so an absolute residual
/// would just restate the operand size).
template <class T>
double relation_residual(const StateExpansion<T>& residual,
                         std::initializer_list<const StateExpansion<T>*> operands) {
    double scale = 1.0;
    for (const auto* s : operands) scale = std::max(scale, s->max_abs());
    return residual.max_abs() / scale;
}

template <class Osc, class T>
double algebra_residual(const Osc& osc, int max_index, bool pq_mode, double p, double q_num) {
    double worst = 0.0;
    for (int n = 0; n <= max_index; ++n) {
        const auto e = StateExpansion<T>::basis(n);
        auto mp = osc_apply(osc, Ladder::minus, osc_apply(osc, Ladder::plus, e));
        auto pm = osc_apply(osc, Ladder::plus, osc_apply(osc, Ladder::minus, e));
        auto ne = osc_apply(osc, Ladder::number, e);

        if (!pq_mode) {
            // A-A+ - A+A- = q^N   and   A-A+ - qA+A- = I
            auto qn = e;
            if constexpr (is_exact_backend_v<T>)
                qn *= pow_int(T(osc.q), n);
            else
                qn *= T(std::pow(q_num, n));
            auto r1 = mp;
            r1 -= pm;
            r1 -= qn;
            worst = std::max(worst, relation_residual<T>(r1, {&mp, &pm, &qn}));

            auto r2 = mp;
            auto qpm = pm;
            qpm *= T(osc.q);
            r2 -= qpm;
            r2 -= e;
            worst = std::max(worst, relation_residual<T>(r2, {&mp, &qpm, &e}));
        } else {
            // A-A+ - pA+A- = q^{-N}   and   A-A+ - q^{-1}A+A- = p^N
            auto ppm = pm;
            ppm *= T(p);
            auto qinv = e;
            qinv *= T(std::pow(q_num, -n));
            auto r1 = mp;
            r1 -= ppm;
            r1 -= qinv;
            worst = std::max(worst, relation_residual<T>(r1, {&mp, &ppm, &qinv}));

            auto qpm = pm;
            qpm *= T(1.0 / q_num);
            auto pn = e;
            pn *= T(std::pow(p, n));
            auto r2 = mp;
            r2 -= qpm;
            r2 -= pn;
            worst = std::max(worst, relation_residual<T>(r2, {&mp, &qpm, &pn}));
        }

        // [N, A-] = -A-  and  [N, A+] = A+
        auto am = osc_apply(osc, Ladder::minus, e);
        auto r3 = osc_apply(osc, Ladder::number, am);
        auto nm = osc_apply(osc, Ladder::minus, ne);
        r3 -= nm;
        auto minus_am = am;
        minus_am *= T(-1);
        r3 -= minus_am;
        worst = std::max(worst, relation_residual<T>(r3, {&am, &nm}));

        auto ap = osc_apply(osc, Ladder::plus, e);
        auto r4 = osc_apply(osc, Ladder::number, ap);
        auto np = osc_apply(osc, Ladder::plus, ne);
        r4 -= np;
        r4 -= ap;
        worst = std::max(worst, relation_residual<T>(r4, {&ap, &np}));
    }
    return worst;
}

}  // namespace detail

/// Applies both sides of every defining relation to the basis vectors up
/// to max_index and reports the worst residual. Exactly zero over the
/// Rational backend.
template <class T>
VerificationReport verify_algebra_relations(const QOscillator<T>& osc, int max_index) {
    if (max_index < 1) throw DomainError("verify_algebra_relations: max_index >= 1");
    double q_num = 0.0;
    if constexpr (!is_exact_backend_v<T>) q_num = static_cast<double>(std::real(Complex(osc.q)));
    const double worst = detail::algebra_residual<QOscillator<T>, T>(osc, max_index, false,
                                                                     0.0, q_num);
    const bool exact = is_exact_backend_v<T>;
    const double tol = exact ? 0.0 : 1e-13;
    VerificationReport r;
    r.identity_name = "q-oscillator defining relations";
    r.parameters = {{"q", format_scalar(osc.q)},
                    {"max_index", std::to_string(max_index)},
                    {"backend", exact ? "exact-rational" : "floating"}};
    r.lhs = "max residual";
    r.rhs = "0";
    r.abs_err = worst;
    r.rel_err = worst;
    r.tolerance = tol;
    r.passed = worst <= tol;
    return r;
}

inline VerificationReport verify_algebra_relations(const PQOscillator& osc, int max_index) {
    if (max_index < 1) throw DomainError("verify_algebra_relations: max_index >= 1");
    const double worst = detail::algebra_residual<PQOscillator, Complex>(
        osc, max_index, true, osc.p, osc.q);
    VerificationReport r;
    r.identity_name = "(p,q)-oscillator defining relations";
    r.parameters = {{"p", to_decimal(osc.p)},
                    {"q", to_decimal(osc.q)},
                    {"max_index", std::to_string(max_index)}};
    r.lhs = "max residual";
    r.rhs = "0";
    r.abs_err = worst;
    r.rel_err = worst;
    r.tolerance = 1e-13;
    r.passed = worst <= r.tolerance;
    return r;
}

/// Checks the differential realization A- = qD, A+ = (1+y) - (1-q) y qD on
/// the H_n: A+ H_n = H_{n+1} and A- H_n = [n]_q H_{n-1}, coefficient-wise.
template <class T>
VerificationReport verify_jackson_realization(const T& q, int max_degree) {
    if (max_degree < 1) throw DomainError("verify_jackson_realization: max_degree >= 1");
    double worst = 0.0;
    bool all_identical = true;
    for (int n = 0; n <= max_degree; ++n) {
        const auto h = rs_direct<T>(n, q);
        const auto dh = jackson_derivative(h, q);
        // A+ h = (1+y) h - (1-q) y (qD h)
        QPolynomial<T> raised = h + h.shifted_up() - (T(1) - q) * dh.shifted_up();
        QPolynomial<T> expect_up = rs_direct<T>(n + 1, q);
        QPolynomial<T> expect_dn =
            (n == 0) ? QPolynomial<T>::zero() : qnumber_m<T>(n, q) * rs_direct<T>(n - 1, q);
        const QPolynomial<T> d_up = raised - expect_up;
        const QPolynomial<T> d_dn = dh - expect_dn;
        if (!d_up.is_zero() || !d_dn.is_zero()) {
            all_identical = false;
            if constexpr (!is_exact_backend_v<T>) {
                for (int k = 0; k <= d_up.degree(); ++k)
                    worst = std::max(worst, abs_value(d_up.coeff(k)));
                for (int k = 0; k <= d_dn.degree(); ++k)
                    worst = std::max(worst, abs_value(d_dn.coeff(k)));
            }
        }
    }
    const bool exact = is_exact_backend_v<T>;
    VerificationReport r;
    r.identity_name = "Jackson-derivative ladder realization on H_n";
    r.parameters = {{"q", format_scalar(q)},
                    {"max_degree", std::to_string(max_degree)},
                    {"backend", exact ? "exact-rational" : "floating"}};
    r.lhs = "max coefficient residual";
    r.rhs = "0";
    if (exact) {
        r.abs_err = all_identical ? 0.0 : 1.0;
        r.rel_err = r.abs_err;
        r.tolerance = 0.0;
    } else {
        r.abs_err = worst;
        r.rel_err = worst;
        r.tolerance = 1e-13;
    }
    r.passed = r.rel_err <= r.tolerance;
    return r;
}

/// Exact finite-sum matrix element of E^{(mu)}(alpha(1-q) A+) E^{(nu)}(beta(1-q) A-)
/// between basis vectors m and n: lowering first (depth j <= n), then the
/// raising order is pinned to m-n+j. No truncation is involved.
inline Complex oracle_matrix_element(const QOscillator<double>& osc, int m, int n,
                                     const Complex& alpha, const Complex& beta,
                                     double mu, double nu) {
    if (m < 0 || n < 0) throw DomainError("oracle_matrix_element: m, n >= 0");
    const double q = osc.q;
    if (!(q > 0.0 && q < 1.0)) throw DomainError("oracle_matrix_element: need 0 < q < 1");
    const Complex cplus = alpha * (1.0 - q);
    const Complex cminus = beta * (1.0 - q);
    Complex total{0.0, 0.0};
    for (int j = std::max(0, n - m); j <= n; ++j) {
        const int i = m - n + j;
        Complex chain{1.0, 0.0};
        for (int d = 0; d < j; ++d) chain *= qnumber_m<double>(n - d, q);
        const Complex lower = std::pow(q, nu * j * j) * pow_int(cminus, j) /
                              qpochhammer(Complex(q), Complex(q), j);
        const Complex upper = std::pow(q, mu * i * i) * pow_int(cplus, i) /
                              qpochhammer(Complex(q), Complex(q), i);
        total += lower * chain * upper;
    }
    return total;
}

/// Same construction for the (p,q) oscillator with
/// E^{mu,nu}(alpha(p^{-1}-q) A+) E^{mu,nu}((beta p/q)(p^{-1}-q) A-) on e_n.
inline Complex oracle_matrix_element(const PQOscillator& osc, int m, int n,
                                     const Complex& alpha, const Complex& beta,
                                     double mu, double nu) {
    if (m < 0 || n < 0) throw DomainError("oracle_matrix_element: m, n >= 0");
    const double p = osc.p, q = osc.q;
    const double d0 = 1.0 / p - q;
    const Complex cplus = alpha * d0;
    const Complex cminus = beta * (p / q) * d0;
    const double w = std::pow(q, mu) / std::pow(p, nu);
    Complex total{0.0, 0.0};
    for (int j = std::max(0, n - m); j <= n; ++j) {
        const int i = m - n + j;
        Complex chain{1.0, 0.0};
        for (int d = 0; d < j; ++d) {
            const int nn = n - d;
            chain *= std::pow(q / p, 1.0 + nn / 2.0) *
                     (std::pow(p, nn) - std::pow(q, -nn)) / d0;
        }
        for (int l = 0; l < i; ++l) {
            const int kk = (n - j) + l;
            chain *= -std::pow(q / p, -(kk + 1) / 2.0);
        }
        total += std::pow(w, static_cast<double>(j) * j) * pow_int(cminus, j) /
                 pq_factorial_std(p, q, j) *
                 std::pow(w, static_cast<double>(i) * i) * pow_int(cplus, i) /
                 pq_factorial_std(p, q, i) * chain;
    }
    return total;
}

}  // namespace qsf
