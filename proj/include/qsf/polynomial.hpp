#pragma once

#include <initializer_list>
#include <vector>

#include "qsf/errors.hpp"
#include "qsf/qcore.hpp"
#include "qsf/scalar.hpp"

namespace qsf {

/// Dense univariate polynomial over a scalar backend (double for floating
/// work, Rational for exact identity checks). Coefficients are indexed by
/// degree; trailing zeros are trimmed so degree() is canonical.
template <class T>
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static QPolynomial zero() { return QPolynomial{}; }
    static QPolynomial one() { return QPolynomial{std::vector<T>{T(1)}}; }
    static QPolynomial monomial(int degree, T coeff = T(1)) {
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(coeff);
        return QPolynomial{std::move(c)};
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<T>& coeffs() const { return c_; }

    template <class U>
    U evaluate(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    QPolynomial& operator*=(const T& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const T& s) { return a *= s; }
    friend QPolynomial operator*(const T& s, QPolynomial a) { return a *= s; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.c_ == b.c_;
    }

    /// Multiplication by the variable: shifts every degree up by one.
    QPolynomial shifted_up() const {
        if (is_zero()) return {};
        std::vector<T> c(c_.size() + 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i];
        return QPolynomial{std::move(c)};
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Jackson derivative (f(y) - f(qy)) / ((1-q) y); on coefficients,
/// c_n y^n -> c_n [n]_q y^{n-1}.
template <class T>
QPolynomial<T> jackson_derivative(const QPolynomial<T>& f, const T& q) {
    if (q == T(1)) throw DomainError("jackson_derivative: q = 1 excluded");
    if (f.degree() < 1) return {};
    std::vector<T> c(static_cast<std::size_t>(f.degree()), T(0));
    for (int n = 1; n <= f.degree(); ++n)
        c[static_cast<std::size_t>(n - 1)] = f.coeff(n) * qnumber_m<T>(n, q);
    return QPolynomial<T>{std::move(c)};
}

enum class Dilation { forward, inverse };

/// q-dilation f(y) -> f(qy) (forward) or f(y/q) (inverse).
template <class T>
QPolynomial<T> q_dilation(const QPolynomial<T>& f, const T& q, Dilation dir) {
    if (dir == Dilation::inverse && q == T(0))
        throw DomainError("q_dilation: inverse direction needs q != 0");
    std::vector<T> c(static_cast<std::size_t>(f.degree() + 1), T(0));
    T scale(1);
    for (int n = 0; n <= f.degree(); ++n) {
        c[static_cast<std::size_t>(n)] = f.coeff(n) * scale;
        if (dir == Dilation::forward)
            scale *= q;
        else
            scale /= q;
    }
    return QPolynomial<T>{std::move(c)};
}

/// Degree-counting operator: c_n y^n -> n c_n y^n.
template <class T>
QPolynomial<T> degree_scale(const QPolynomial<T>& f) {
    std::vector<T> c(static_cast<std::size_t>(f.degree() + 1), T(0));
    for (int n = 0; n <= f.degree(); ++n)
        c[static_cast<std::size_t>(n)] = f.coeff(n) * T(n);
    return QPolynomial<T>{std::move(c)};
}

}  // namespace qsf
